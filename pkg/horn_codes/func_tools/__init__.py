from horn_codes.func_tools.filter import filter
from horn_codes.func_tools.map import map

__all__ = ["map", "filter"]
