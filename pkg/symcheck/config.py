# Verification defaults (overridable by CLI flags only)
DEFAULT_N_MAX = 2
DEFAULT_WEIGHT_MAX = 6
DEFAULT_Y_DEGREE_MAX = 6
DEFAULT_WORKERS = 1
DEFAULT_FORMAT = "json"

# Suites, in canonical run order
SUITES = ("core", "lemmas", "kostka", "phi", "n2", "explore")
DEFAULT_SUITES = ("core", "lemmas", "kostka", "phi", "n2")

# Largest instance size where the main conjecture is a theorem
PROVED_N_MAX = 2
EXPLORE_N_MIN = 3

# Fixed sweep bounds
LEMMA_U_MAX = 10                # q(x,x) lemma: 0 <= u <= 10
LEMMA_N_VALUES = (1, 2, 3)      # q(x,x) lemma variable counts
ALTERNATING_R_MAX = 12          # alternating convolution: 1 <= r <= 12
ALTERNATING_N_MAX = 3
DOUBLED_SUBSTITUTION_R_MAX = 8  # q_r(x,x) vs substitution: r <= 8
DOUBLED_SUBSTITUTION_N_MAX = 2
BINOMIAL_SUM_MAX = 24           # binomial lemma: n + m <= 24
ER_WEIGHT_MAX = 16              # two-column inverse Kostka formula: weight <= 16
ROUND_TRIP_WEIGHT_MAX = 10      # K * K^-1 = I: weight <= 10
INVERSE_KOSTKA_U_MAX = 6        # inverse-Kostka identity: u1, v1 <= 6
CAUCHY_N = 2                    # Cauchy-type identity variable count
Q_EXPRESSION_VARIABLES = (2, 3)

# Logging
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(message)s"
