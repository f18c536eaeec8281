from rest_framework.renderers import JSONRenderer

from partitions.applications.census.backends import RecordWriter
from partitions.applications.census.serializers import CensusRecordSerializer


class JsonLinesWriter(RecordWriter):
    renderer = JSONRenderer()

    def write(self, record):
        data = CensusRecordSerializer(record, context={'decimal': self.decimal}).data
        self.stream.write(self.renderer.render(data).decode() + '\n')
