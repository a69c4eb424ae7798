"""Shared constants for kacv."""

# Enumeration limits
DEFAULT_BUDGET = 2 ** 24
DEFAULT_SUBREP_BUDGET = 2 ** 16
DEFAULT_END_ENUMERATION_LIMIT = 2 ** 16
DEFAULT_SWEEP_BUDGET = 2 ** 12
DEFAULT_FIELD_TABLE_LIMIT = 2 ** 20

# Field sampling
DEFAULT_MAX_PRIME = 97
MAX_EXTENSION_DEGREE = 4
DEFAULT_INTERPOLATION_RETRIES = 3

# Execution
DEFAULT_WORKERS = 1
DEFAULT_CHUNK_SIZE = 2 ** 14

# Peterson recursion box
MAX_BOX_HEIGHT = 40

# Generic weight search gives up beyond this max-norm
MAX_WEIGHT_NORM = 64

# Counting methods
METHOD_DIRECT = 'direct'
METHOD_MOMENT = 'moment'
METHOD_BOTH = 'both'
METHOD_AUTO = 'auto'
SUPPORTED_METHODS = [METHOD_DIRECT, METHOD_MOMENT, METHOD_BOTH]
SAMPLING_METHODS = [METHOD_DIRECT, METHOD_MOMENT, METHOD_AUTO]

# Verification checks
CHECK_CONJ_A = 'conjA'
CHECK_CONJ_B = 'conjB'
CHECK_APPENDIX = 'appendix'
CHECK_HN = 'hn'
CHECK_ALL = 'all'
SUPPORTED_CHECKS = [CHECK_CONJ_A, CHECK_CONJ_B, CHECK_APPENDIX, CHECK_HN, CHECK_ALL]

# Record statuses
STATUS_PASS = 'PASS'
STATUS_FAIL = 'FAIL'
STATUS_INFO = 'INFO'
STATUS_SKIP = 'SKIP'

# Quiver file keywords
KEYWORD_VERTEX = 'vertex'
KEYWORD_ARROW = 'arrow'
KEYWORD_DIM = 'dim'
KEYWORD_WEIGHT = 'weight'
COMMENT_CHAR = '#'

# Configuration presets
PRESET_DEFAULT = 'default'
PRESET_QUICK = 'quick'
PRESET_THOROUGH = 'thorough'
SUPPORTED_PRESETS = [PRESET_DEFAULT, PRESET_QUICK, PRESET_THOROUGH]
