from .conversions import to_fraction, fraction_to_str, as_float_array, is_exact, match_type
from .io import to_json, write_csv, write_distance_csv, distance_frame
