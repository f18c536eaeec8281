from rest_framework import serializers


class SelectorProfileSerializer(serializers.Serializer):
    n0_d = serializers.IntegerField(read_only=True)
    n0_pm = serializers.IntegerField(read_only=True)
    n0_m = serializers.IntegerField(read_only=True)
    n0_R = serializers.IntegerField(read_only=True)
    equal_pairs = serializers.SerializerMethodField()

    def get_equal_pairs(self, instance):
        return [list(pair) for pair in instance.equal_pairs]


class CalibrationRecordSerializer(serializers.Serializer):
    jmax = serializers.CharField(read_only=True)
    total = serializers.IntegerField(read_only=True)
    agreements = serializers.DictField(child=serializers.IntegerField(), read_only=True)
    chosen = serializers.CharField(read_only=True)
