import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Seed used when a command does not pass --seed
DEFAULT_SEED = int(os.getenv("GEOGRUNDY_SEED", "1"))

# Point generation
GRID_SIZE = int(os.getenv("GEOGRUNDY_GRID_SIZE", "4096"))
RETRY_BUDGET = int(os.getenv("GEOGRUNDY_RETRY_BUDGET", "2000"))
CONVEX_RADIUS = int(os.getenv("GEOGRUNDY_CONVEX_RADIUS", "65536"))

# Conflict graphs up to this many points get every row computed up front
DENSE_LIMIT = int(os.getenv("GEOGRUNDY_DENSE_LIMIT", "200"))

# exact_grundy enumerates node orderings up to this size
ORDERING_LIMIT = int(os.getenv("GEOGRUNDY_ORDERING_LIMIT", "8"))

# Rendering
SVG_SIZE = int(os.getenv("GEOGRUNDY_SVG_SIZE", "800"))

LOG_LEVEL = os.getenv("GEOGRUNDY_LOG_LEVEL", "WARNING").upper()
