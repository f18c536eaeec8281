from rest_framework import serializers

from racah.applications.symbol.serializers import SymbolSerializer


class SetClassSerializer(serializers.Serializer):
    def to_representation(self, instance):
        return SymbolSerializer(instance.canonical).data


class OrbitReportSerializer(serializers.Serializer):
    n_empty = serializers.IntegerField(read_only=True)
    orbit_classes = serializers.SerializerMethodField()
    classes = SetClassSerializer(many=True, read_only=True)

    def get_orbit_classes(self, instance):
        return len(instance)


class ReggeArraySerializer(serializers.BaseSerializer):
    def to_representation(self, instance):
        return [[str(v) for v in row] for row in instance.rows]
