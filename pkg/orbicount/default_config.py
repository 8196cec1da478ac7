# DEFAULT CONFIGURATION

# Groups
MAX_GROUP_ORDER = 10 ** 6
MAX_TABLE_ORDER = 32000
MATERIALIZE_ORDER = 2048
EXHAUSTIVE_CHECK_ORDER = 512
SAMPLED_TRIPLES = 10 ** 5

# Enumeration caps
MAX_HOMS = 2 * 10 ** 6
MAX_SEARCH_NODES = 5 * 10 ** 6
MAX_GSET_TABLE = 2 * 10 ** 7
# |Hom(Γ, G wr S_n)| · |G wr S_n| bound for the Burnside form of the left side
MAX_BURNSIDE_PAIRS = 10 ** 7

# Soft wall-clock budget per command, in seconds.
# Can be overridden with the ORBICOUNT_BUDGET_SECS environment variable.
BUDGET_SECS = 300

# Seed for sampled verification modes
SEED = 0

# Logging
LOG_LEVEL = 'WARNING'
LOG_FILE_ENABLED = False
LOG_FILE = 'orbicount.log'
LOG_SENTRY_ENABLED = False
SENTRY_DSN = None
