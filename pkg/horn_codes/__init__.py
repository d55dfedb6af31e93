# horn-codes

from horn_codes.exception import ErrorType as ErrorType
from horn_codes.exception import HornCodesError as HornCodesError
from horn_codes.partitions import Partition as Partition
from horn_codes.finite_field import FieldSpec as FieldSpec
from horn_codes.polynomials import Poly as Poly
from horn_codes.polynomials import RationalFunction as RationalFunction
