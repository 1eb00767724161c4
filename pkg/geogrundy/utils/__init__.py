from .io import (
    dump_json,
    format_point_file,
    parse_point_file,
    read_coloring_file,
    read_point_file,
    write_coloring_file,
    write_decomposition_file,
    write_point_file,
    write_text,
)
