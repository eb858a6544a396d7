from .min_max_normalization import min_max_normalization
from .pretty import pretty
