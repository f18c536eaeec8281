from rest_framework import serializers

from racah.exceptions import DomainError, InvalidSymbol
from racah.applications.symbol.values import HalfInt, Symbol3j


class HalfIntField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected an integer or half-integer such as "2" or "-3/2".',
    }

    def to_representation(self, value):
        return str(HalfInt.of(value))

    def to_internal_value(self, data):
        try:
            return HalfInt.parse(str(data))
        except DomainError:
            self.fail('invalid')


class SymbolSerializer(serializers.Serializer):
    j = serializers.ListField(child=HalfIntField(), min_length=3, max_length=3)
    m = serializers.ListField(child=HalfIntField(), min_length=3, max_length=3)

    def to_representation(self, instance):
        return {
            'j': [str(v) for v in instance.j],
            'm': [str(v) for v in instance.m],
        }

    def validate(self, attrs):
        try:
            attrs['symbol'] = Symbol3j.of(attrs['j'], attrs['m'])
        except InvalidSymbol as e:
            raise serializers.ValidationError({'verdict': e.verdict})
        return attrs

    def create(self, validated_data):
        return validated_data['symbol']
