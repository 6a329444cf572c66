import os
from dotenv import load_dotenv

load_dotenv()

# Resource limits (overridable per invocation with --max-crossings / --max-orbit / --depth)
MAX_CROSSINGS = int(os.getenv("SOLENOID_MAX_CROSSINGS", "24"))
MAX_ORBIT = int(os.getenv("SOLENOID_MAX_ORBIT", "100000"))
DEFAULT_DEPTH = int(os.getenv("SOLENOID_DEPTH", "3"))

# State-sum partitioning
PARALLEL_MIN_CROSSINGS = int(os.getenv("SOLENOID_PARALLEL_MIN_CROSSINGS", "18"))
STATE_BATCH_SIZE = int(os.getenv("SOLENOID_STATE_BATCH", "16384"))

CACHE_SIZE = int(os.getenv("SOLENOID_CACHE_SIZE", "2048"))

# Where diagrams go when `draw` gets no --out
DIAGRAM_DIR = os.getenv("SOLENOID_DIAGRAM_DIR", "./diagrams")

LOG_LEVEL = os.getenv("SOLENOID_LOG_LEVEL", "WARNING")
