from configparser import ConfigParser
import logging
import os
from os import path

logger = logging.getLogger(__name__)

# Default vertex budgets per operation family, family_k caps the index k instead
BUDGETS = {
    'canonical': 12,
    'generation': 11,
    'class_index': 14,
    'perfect': 16,
    'neighborhood_perfect': 17,
    'equivalence': 10,
    'family_k': 4,
}

BUDGET_ENV = 'FORBIDDENKIT_BUDGET'
DEFAULT_CONFIG_PATH = '~/.config/forbiddenkit/config.ini'

CONFIG = ConfigParser()
CONFIG_PATH = None
VERBOSE = False

_env_warned = False


class BudgetExceeded(ValueError):
    """Raised when an input is larger than an operation's budget.

    `unit` is 'vertex' for graph orders and 'k' for the family index limit.
    `line_no` is set when the input came from a file.
    """

    def __init__(self, operation, n, limit, unit='vertex', line_no=None):
        if unit == 'k':
            detail = f"k={n} exceeds the supported limit of {limit}"
        else:
            detail = (f"{n} exceeds the vertex budget of {limit} "
                      f"(raise it with {BUDGET_ENV} at your own risk)")
        message = f"{operation}: {detail}"
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.operation = operation
        self.n = n
        self.limit = limit
        self.unit = unit
        self.line_no = line_no

    def at_line(self, line_no):
        return BudgetExceeded(self.operation, self.n, self.limit, self.unit, line_no)


def check_value(section, key, value):
    """Check that a section and key exist, otherwise set defaults."""
    if section not in CONFIG:
        CONFIG.add_section(section)
    if key not in CONFIG[section]:
        CONFIG[section][key] = value


def verify_defaults():
    """Ensure minimal configuration exists."""
    check_value('CACHE', 'path', '~/.cache/forbiddenkit/')
    check_value('LOG', 'verbose', 'False')

    check_value('ENUMERATION', 'jobs', '0')          # 0 = os.cpu_count()
    check_value('ENUMERATION', 'shard_level', '7')   # parent level used as shard key
    check_value('ENUMERATION', 'progress', 'True')

    for name, limit in BUDGETS.items():
        check_value('BUDGET', name, str(limit))

    global VERBOSE
    VERBOSE = CONFIG.getboolean('LOG', 'verbose', fallback=False)


def init_config(in_path=DEFAULT_CONFIG_PATH):
    """Initialize configuration from file, creating defaults if needed."""
    global CONFIG_PATH
    config_path = path.abspath(path.expanduser(in_path))
    CONFIG_PATH = config_path
    os.makedirs(path.dirname(config_path), exist_ok=True)
    CONFIG.read(config_path)
    verify_defaults()
    with open(config_path, 'w') as configfile:
        CONFIG.write(configfile)


def _env_budget():
    raw = os.environ.get(BUDGET_ENV, '').strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {BUDGET_ENV}={raw!r}")
        return None
    global _env_warned
    if not _env_warned:
        logger.warning(f"{BUDGET_ENV}={value}: vertex budgets raised, results "
                       f"beyond the defaults are unsupported")
        _env_warned = True
    return value


def budget(name):
    """Effective budget for an operation family; the env override leaves family_k alone."""
    if 'BUDGET' not in CONFIG:
        verify_defaults()
    limit = CONFIG.getint('BUDGET', name, fallback=BUDGETS[name])
    raised = _env_budget() if name != 'family_k' else None
    if raised is not None:
        limit = max(limit, raised)
    return limit


def require_budget(name, n, operation=None):
    """Raise BudgetExceeded when n is above the named budget."""
    limit = budget(name)
    if n > limit:
        raise BudgetExceeded(operation or name, n, limit)


def enumeration_jobs():
    """Worker count for the enumeration pool; 0 in the config means all CPUs."""
    if 'ENUMERATION' not in CONFIG:
        verify_defaults()
    jobs = CONFIG.getint('ENUMERATION', 'jobs', fallback=0)
    return jobs if jobs > 0 else (os.cpu_count() or 1)


def shard_level():
    if 'ENUMERATION' not in CONFIG:
        verify_defaults()
    return CONFIG.getint('ENUMERATION', 'shard_level', fallback=7)


def show_progress():
    if 'ENUMERATION' not in CONFIG:
        verify_defaults()
    return CONFIG.getboolean('ENUMERATION', 'progress', fallback=True)


def cache_dir():
    """Return the cache directory, creating it if needed."""
    if 'CACHE' not in CONFIG:
        verify_defaults()
    directory = path.expanduser(CONFIG['CACHE']['path'])
    os.makedirs(directory, exist_ok=True)
    return directory


def checkpoint_path(param, k):
    """Return the default checkpoint database for one (parameter, k) run."""
    return path.join(cache_dir(), f"checkpoint-{param}-{k}.db")
