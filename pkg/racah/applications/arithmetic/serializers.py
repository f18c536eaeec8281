from math import gcd

from rest_framework import serializers

from racah.exceptions import DomainError
from racah.applications.arithmetic.sqrt_rational import SqrtRational, format_rational, parse_rational


class SqrtRationalSerializer(serializers.Serializer):
    sign = serializers.IntegerField(min_value=-1, max_value=1)
    radicand = serializers.CharField()

    def to_representation(self, instance):
        return {'sign': instance.sign, 'radicand': format_rational(instance.radicand)}

    def validate_radicand(self, value):
        try:
            radicand = parse_rational(value)
        except DomainError as e:
            raise serializers.ValidationError(str(e))
        numerator, denominator = value.split('/')
        if gcd(int(numerator), int(denominator)) != 1:
            raise serializers.ValidationError('radicand must be in lowest terms.')
        if radicand < 0:
            raise serializers.ValidationError('radicand must be nonnegative.')
        return radicand

    def validate(self, attrs):
        if (attrs['sign'] == 0) != (attrs['radicand'] == 0):
            raise serializers.ValidationError('sign is zero exactly when the radicand is zero.')
        return attrs

    def create(self, validated_data):
        return SqrtRational(validated_data['sign'], validated_data['radicand'])


class DecimalSqrtRationalSerializer(SqrtRationalSerializer):
    def to_representation(self, instance):
        data = super().to_representation(instance)
        data['decimal'] = instance.to_decimal()
        return data
