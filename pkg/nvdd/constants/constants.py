import math

# Geometry tolerances
EPS_GEOM = 1e-9
EPS_PAR = 1e-12
EPS_AREA = 1e-12
# Relative tolerance used for the duality roundtrips and equal-angle checks
EPS_DUALITY = 1e-9

# Anonymizing model defaults
DEFAULT_SECTOR_RADIUS = 1.0
DEFAULT_MU = 2.0
DEFAULT_MAX_RETRIES = 100
DEFAULT_REGULARITY_TOL = 1e-6
MAX_KAPPA = 0.5
# Lower bound of a shifting range, as a fraction of the previous radius/distance,
# whenever the cosine of the sector angle is not positive.
RANGE_FLOOR = 0.05
SCALE_MODES = ('max', 'roi', 'privacy')
DEFAULT_SCALE_MODE = 'max'

# Simulation defaults
DEFAULT_REGION_SIDE = 1e4
DEFAULT_N_VALUES = tuple(range(3, 11))
DEFAULT_KAPPA_VALUES = (0.0, 0.02, 0.04, 0.06, 0.08, 0.1)
DEFAULT_R_VALUES = (1e3,)
DEFAULT_ITERATIONS = 1000
DEFAULT_MASTER_SEED = 0
MAX_FAILURE_RATE = 0.01
ZONE_SAMPLES_PER_TRIAL = 100
THREADS_ENV = 'NVDD_THREADS'

# n-CD baseline
DEFAULT_CIRCLE_SEGMENTS = 256
MIN_CIRCLE_SEGMENTS = 64
UNION_OVERSAMPLING = 8
NCD_MC_SAMPLES = 100000
NCD_MC_TOLERANCE = 0.01

# Wire format
HEADER_BYTES = 40
UID_BYTES = 8
COORD_BYTES = 8
DISK_BYTES = 12
UPSTREAM_MAGIC = b'NVDD'
DOWNSTREAM_MAGIC = b'NVDP'
WIRE_VERSION = 1
MAX_WIRE_VERTICES = 255
MAX_WIRE_POIS = 65535

# CSV output
SWEEP_CSV_FIELDS = ['model', 'n', 'kappa', 'r', 'mean_psi', 'mean_gamma',
                    'mean_ratio', 'upstream_bytes', 'trials', 'failures']
ATTACK_CSV_FIELDS = ['model', 'n', 'trials', 'failures', 'mean_dist_pv', 'mean_dist_az',
                     'stderr_dist_pv', 'circle_hit_fraction']
CSV_FLOAT_FORMAT = '{:.6g}'
NCD_LABEL = 'nCD'

TWO_PI = 2.0 * math.pi
