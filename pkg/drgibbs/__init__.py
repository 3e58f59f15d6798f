# drgibbs - Gibbs kernel positivity on distance-regular graphs via polynomial hypergroups

__version__ = '0.1.0'

from . import hypergroup
from . import families
from . import positivity
from . import oracle
from . import embedding
from . import measures
from . import utils
