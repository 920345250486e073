from .version import VERSION
from .errors import ReebError
from . import errors
from .config import AnalysisConfig
from .stats import SearchStats
from .graph_core import Graph, canonical_form, is_isomorphic
from . import complex
from . import recognition
from . import morse
from . import reeb
from . import formats
from . import fixtures
from . import recipe
from . import cli
