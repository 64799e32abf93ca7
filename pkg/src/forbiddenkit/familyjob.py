"""
Long-running generation of a forbidden family.

  1. Takes the job lock in the cache directory
  2. Splits every candidate level into shards (subtrees below the
     representatives at the shard level) and scans them in a process pool
  3. Records each finished shard in the sqlite checkpoint, so an
     interrupted run can be resumed with --resume
  4. Writes the sorted family file and its sidecar
  5. Logs everything to a rotating log file

The family produced is the same for any worker count and any
interruption/resume pattern: shards are independent and the result is a
set of canonical forms.
"""

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path

from tqdm import tqdm

from . import config, database
from .family import (ForbiddenFamily, candidate_orders, check_family_k, histogram,
                     report_count, scan_shard, write_family)
from .forbidden import Parameter
from .generate import Node, shard_roots
from .iso import canonical_form

LOGGER_NAME = __name__.rsplit('.', 1)[0]


# --- File paths derived from config cache dir ---

def _cache_dir():
    return Path(config.cache_dir())

def _log_path():
    return _cache_dir() / 'gen_family.log'

def _lock_path():
    return _cache_dir() / 'gen_family.lock'


def setup_logging(verbose=False):
    """Configure package logging to both the rotating file and stderr."""
    log_file = _log_path()
    log_file.parent.mkdir(parents=True, exist_ok=True)

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    if any(getattr(h, 'baseFilename', None) == str(log_file) for h in logger.handlers):
        return logger

    # Rotating file: 5 MB max, keep 3 backups
    fh = RotatingFileHandler(str(log_file), maxBytes=5*1024*1024, backupCount=3)
    fh.setFormatter(logging.Formatter(
        '%(asctime)s [%(levelname)s] %(message)s', datefmt='%Y-%m-%d %H:%M:%S'))
    logger.addHandler(fh)

    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
    logger.addHandler(sh)
    logger.propagate = False

    return logger


def _lock_owner(lock):
    try:
        return int(lock.read_text().strip())
    except (OSError, ValueError):
        return None


def _pid_alive(pid):
    try:
        os.kill(pid, 0)
    except ProcessLookupError:
        return False
    except PermissionError:
        return True
    return True


def acquire_lock(logger):
    """File lock so that two generation jobs never share a cache directory."""
    lock = _lock_path()
    if lock.exists():
        owner = _lock_owner(lock)
        age = datetime.now().timestamp() - lock.stat().st_mtime
        if owner is not None and owner != os.getpid() and _pid_alive(owner):
            logger.warning(f"Another generation job (pid {owner}) is running. Exiting.")
            return False
        if owner == os.getpid():
            logger.warning("This process already holds the generation lock.")
            return False
        # unreadable lock: stale after one hour without a heartbeat
        if owner is None and age <= 3600:
            logger.warning("Another generation job is running (lock exists). Exiting.")
            return False
        logger.warning(f"Stale lock found (pid {owner}, {age:.0f}s old), removing.")
        lock.unlink()

    lock.write_text(str(os.getpid()))
    return True


def touch_lock():
    """Heartbeat: refresh the lock's mtime while a job is running."""
    lock = _lock_path()
    if _lock_owner(lock) == os.getpid():
        os.utime(lock)


def release_lock():
    lock = _lock_path()
    if lock.exists() and _lock_owner(lock) == os.getpid():
        lock.unlink()


def shard_key(root: Node) -> str:
    return root[1].graph6()


def _scan_task(root: Node, m: int, p: Parameter, k: int):
    """Worker entry point: scan one shard, return members as canonical pairs."""
    candidates, found = scan_shard(root, m, p, k)
    return m, shard_key(root), candidates, [(canonical_form(g), g) for g in found]


def plan_shards(k: int, done=frozenset()):
    """(m, root) work units of every candidate level, skipping finished ones."""
    tasks = []
    for m in candidate_orders(k):
        for root in shard_roots(m):
            if (m, shard_key(root)) not in done:
                tasks.append((m, root))
    return tasks


def generate_family(p: Parameter, k: int, jobs=None, checkpoint=None, progress=None) -> ForbiddenFamily:
    """
    F(p, k) over a process pool. With a checkpoint path, shards already
    recorded there are skipped and their members reloaded.
    """
    logger = logging.getLogger(__name__)
    check_family_k(k)
    jobs = jobs or config.enumeration_jobs()
    if progress is None:
        progress = config.show_progress() and sys.stderr.isatty()

    fam = ForbiddenFamily(p, k, vertex_range=(k + 3, 2 * k + 3))
    done = set()
    if checkpoint:
        done = database.finished_shards(checkpoint, p, k)
        for form, g in database.load_members(checkpoint, p, k):
            fam.members[form] = g
        if done:
            logger.info(f"Resuming from {checkpoint}: {len(done)} shards, {len(fam)} members recorded")

    tasks = plan_shards(k, done)
    logger.info(f"F({p},{k}): {len(tasks)} shards to scan with {jobs} worker(s)")
    failures = []
    bar = tqdm(total=len(tasks), unit='shard', desc=f"F({p},{k})", file=sys.stderr, disable=not progress)

    def collect(m, key, candidates, members):
        for form, g in members:
            fam.members.setdefault(form, g)
        if checkpoint:
            database.record_shard(checkpoint, p, k, m, key, candidates, members)
        touch_lock()
        bar.update(1)

    try:
        if jobs == 1:
            for m, root in tasks:
                collect(*_scan_task(root, m, p, k))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                futures = {ex.submit(_scan_task, root, m, p, k): (m, shard_key(root)) for m, root in tasks}
                for future in as_completed(futures):
                    try:
                        collect(*future.result())
                    except Exception as e:
                        m, key = futures[future]
                        logger.error(f"Shard {key} on {m} vertices failed: {e}", exc_info=True)
                        failures.append(e)
    finally:
        bar.close()

    if failures:
        raise failures[0]

    if checkpoint:
        for m in candidate_orders(k):
            logger.info(f"F({p},{k}): {database.shard_candidates(checkpoint, p, k, m)} candidates on {m} vertices")
    fam.generated_at = datetime.now().isoformat(timespec='seconds')
    logger.info(f"F({p},{k}): {len(fam)} members, per vertex count {histogram(fam)}")
    report_count(fam)
    return fam


def run_generation(p: Parameter, k: int, out, jobs=None, resume=None, restart=False, progress=None,
                   verbose=False):
    """
    Generation job: lock, generate, write. Returns the family, or None if
    locked out. With restart, the checkpoint forgets this (p, k) run first.
    """
    logger = setup_logging(verbose)

    logger.info("=" * 50)
    logger.info(f"Generation of F({p},{k}) started")

    if not acquire_lock(logger):
        return None

    try:
        if restart and resume and os.path.exists(resume):
            database.purge_run(resume, p, k)
        fam = generate_family(p, k, jobs=jobs, checkpoint=resume, progress=progress)
        write_family(fam, out)
        logger.info(f"Generation of F({p},{k}) finished: {len(fam)} members in {out}")
        return fam
    except Exception as e:
        logger.error(f"Generation failed: {e}", exc_info=True)
        raise
    finally:
        release_lock()
