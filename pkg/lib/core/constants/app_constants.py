"""Application-wide constants for the phantom FCM toolkit."""

PACKAGE_NAME = "phantom-fcm"
PACKAGE_VERSION = "0.1.0"

DEFAULT_LOG_LEVEL = "INFO"
LOG_LEVEL_ENV = "FCM_LOG_LEVEL"
THREADS_ENV = "FCM_THREADS"
OUTPUT_FORMAT_ENV = "FCM_OUTPUT_FORMAT"
DEFAULT_THREADS = 1
DEFAULT_OUTPUT_FORMAT = "both"
OUTPUT_FORMATS = ("csv", "pgm", "both")

# Dynamics
DEFAULT_SIGMOID_STEEPNESS = 5.0
DEFAULT_SIGMOID_OFFSET = 0.0
DEFAULT_HARD_THRESHOLD = 0.0
BIPOLAR_SNAP_TOLERANCE = 1e-9
SIGMOID_CYCLE_TOLERANCE = 1e-6
DEFAULT_MAX_STEPS = 512
MAX_EXHAUSTIVE_NODES = 20

# Mixing
CONVEXITY_TOLERANCE = 1e-12
STOCHASTIC_ROW_TOLERANCE = 1e-12

# Learning
DEFAULT_LEARNING_RATE = 0.05
DEFAULT_EPOCHS = 200
DEFAULT_UNROLL_STEPS = 2
DEFAULT_L1_SHRINKAGE = 0.0
DEFAULT_LOG_EVERY = 100
ENTROPIC_CLAMP = 1e-7
FINITE_DIFFERENCE_STEP = 1e-5

# Random streams spawned from one seed
SAMPLING_STREAM = 0
INIT_STREAM = 1
EVALUATION_STREAM = 2

# Experiment
DEFAULT_SEED = 0
DEFAULT_SAMPLE_INITIALS = 10_000
DEFAULT_EVALUATION_INITIALS = 10_000
DEFAULT_RASTER_STEPS = 16
DEFAULT_OUTPUTS_DIR = "results"
SCENARIO_FILE_NAME = "scenario.yaml"

# Process exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG_ERROR = 2
EXIT_TRAINING_FAILURE = 3
EXIT_IO_ERROR = 4
