from rest_framework import serializers

from racah.applications.arithmetic.serializers import DecimalSqrtRationalSerializer, SqrtRationalSerializer
from racah.applications.symbol.serializers import SymbolSerializer
from partitions.applications.selector.serializers import CalibrationRecordSerializer, SelectorProfileSerializer


class CensusRecordSerializer(serializers.Serializer):
    parity = serializers.CharField(read_only=True)
    partition = serializers.IntegerField(read_only=True, allow_null=True)
    oracle = serializers.IntegerField(read_only=True)
    orbit_classes = serializers.IntegerField(read_only=True)

    def to_representation(self, instance):
        symbol = SymbolSerializer(instance.symbol).data
        value_serializer = DecimalSqrtRationalSerializer if self.context.get('decimal') else SqrtRationalSerializer
        data = {'j': symbol['j'], 'm': symbol['m']}
        data.update(super().to_representation(instance))
        data['value'] = value_serializer(instance.value).data
        data['selectors'] = SelectorProfileSerializer(instance.profile).data
        return data


class CensusReportSerializer(serializers.Serializer):
    total = serializers.IntegerField(read_only=True)
    checks = serializers.IntegerField(read_only=True)
    convention = serializers.CharField(read_only=True)
    phase_variant = serializers.CharField(read_only=True, allow_null=True)
    violations = serializers.ListField(child=serializers.CharField(), read_only=True)
    calibration = CalibrationRecordSerializer(read_only=True, allow_null=True)

    def to_representation(self, instance):
        data = {
            'kind': instance.config.kind,
            'jmax': str(instance.config.jmax),
            'counts': {str(label): count for label, count in sorted(instance.counts.items())},
        }
        data.update(super().to_representation(instance))
        data['signs'] = {'+': instance.signs[1], '-': instance.signs[-1]}
        return data
