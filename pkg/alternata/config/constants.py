"""Constants for the alternata toolkit."""

# Carrier bounds
STATESET_WIDTH = 256       # widest carrier a StateSet may index
ENUMERATION_BOUND = 20     # largest poset whose up/down-sets are enumerated
LAYER_CAP = 10**6          # largest layer iterated exhaustively

# Sampling
DEFAULT_SEED = 0xC0A1
DEFAULT_SAMPLE_COUNT = 1000
MAX_SAMPLED_FORKS = 4
SAMPLED_SUBLAYER_SIZE = 6  # T²X elements drawn when T²X itself is too large

# Automata
MAX_WORD_LEN = 8
DETERMINIZE_STATE_CAP = 50_000

# Distributive law suite
DIST_NATURALITY_SIZE = 3     # monotone maps between posets up to this size

# Search bounds for the negative suite
NATURALITY_SEARCH_SIZE = 3
CANDIDATE_EXHAUSTIVE_SIZE = 2
CANDIDATE_SAMPLED_SIZE = 4
CANDIDATE_ASSOCIATIVITY_SAMPLES = 20

# Semantics suite
POINTWISE_POINTS = 2         # |Y| of the function space 2^Y
POINTWISE_LAYER_CAP = 4096   # T(2^Y) layers beyond this are sampled
RANDOM_NFA_COUNT = 50
RANDOM_NFA_STATES = 4
RANDOM_NFA_WORD_LEN = 6
LEMMA_MAX_SIZE = 3
