class RecordWriter:
    """Sink for census records, one SetClass at a time"""

    def __init__(self, stream, decimal=False, *args, **kwargs):
        self.stream = stream
        self.decimal = decimal

    def open(self):
        pass

    def write(self, record):
        raise NotImplementedError('subclasses of RecordWriter must provide a write() method')

    def close(self):
        self.stream.flush()
