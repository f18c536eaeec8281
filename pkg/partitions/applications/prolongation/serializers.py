from rest_framework import serializers

from racah.applications.symbol.serializers import SymbolSerializer


class FlatBetaSymbolSerializer(serializers.Serializer):
    kappa = serializers.IntegerField(read_only=True)
    base = serializers.SerializerMethodField()

    def get_base(self, instance):
        return SymbolSerializer(instance.base).data
