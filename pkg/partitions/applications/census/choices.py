from partitions import translates as _

FORMAT_JSON_LINES = 'json-lines'
FORMAT_CSV = 'csv'

FORMAT = (
    (FORMAT_JSON_LINES, _.format_json_lines),
    (FORMAT_CSV, _.format_csv),
)

CSV_HEADER = ('j1', 'j2', 'j3', 'm1', 'm2', 'm3', 'parity', 'sign', 'radicand', 'partition')
