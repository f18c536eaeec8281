import csv

from racah.applications.arithmetic.sqrt_rational import format_rational
from partitions.applications.census import choices
from partitions.applications.census.backends import RecordWriter


class CsvWriter(RecordWriter):
    def __init__(self, stream, decimal=False, *args, **kwargs):
        super().__init__(stream, decimal, *args, **kwargs)
        self.writer = csv.writer(stream, lineterminator='\n')

    def open(self):
        self.writer.writerow(choices.CSV_HEADER)

    def write(self, record):
        partition = '' if record.partition is None else record.partition
        self.writer.writerow(
            [str(v) for v in record.symbol.j]
            + [str(v) for v in record.symbol.m]
            + [record.parity, record.value.sign, format_rational(record.value.radicand), partition]
        )
