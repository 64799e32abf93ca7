"""
Test the checkpoint database, the job lock and sharded family generation.
Run from project root with: python -m tests.testfamilyjob
"""
import sys
import os
import time

# Add the src directory to path so 'import forbiddenkit' works
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from forbiddenkit import config, database
from forbiddenkit.catalog import named
from forbiddenkit.family import enumerate_family, read_family
from forbiddenkit.familyjob import (_lock_path, _scan_task, acquire_lock, generate_family,
                                    plan_shards, release_lock, run_generation, touch_lock)
from forbiddenkit.forbidden import Parameter
from forbiddenkit.iso import canonical_form

CHI, OMEGA = Parameter.CHI, Parameter.OMEGA

TEST_DB = '/tmp/test_forbiddenkit_checkpoint.db'
TEST_CONFIG = '/tmp/test_forbiddenkit_job_config.ini'
TEST_CACHE = '/tmp/test_forbiddenkit_cache/'
TEST_OUT = '/tmp/test_forbiddenkit_job.g6'

# above the largest pid_max on Linux, so no process has it
DEAD_PID = 2 ** 22 + 1


def setup():
    config.init_config(TEST_CONFIG)
    config.CONFIG['CACHE']['path'] = TEST_CACHE
    config.CONFIG['ENUMERATION']['shard_level'] = '3'
    config.CONFIG['ENUMERATION']['progress'] = 'False'


def cleanup():
    """Remove temp files. Safe if they don't exist."""
    for f in [TEST_DB, TEST_CONFIG, TEST_OUT, TEST_OUT + '.meta']:
        if os.path.exists(f):
            os.unlink(f)
    release_lock()


def members_of(*graphs):
    return [(canonical_form(g), g) for g in graphs]


def test_record_shard_with_diff():
    print("=== Testing record_shard ===")
    setup()
    if os.path.exists(TEST_DB):
        os.unlink(TEST_DB)

    new = database.record_shard(TEST_DB, CHI, 1, 4, 'A_', 10, members_of(named('claw')))
    assert len(new) == 1
    print(f"  Shard 1: {len(new)} new member ✓")

    batch = members_of(named('claw'), named('gem'), named('W', 4))
    new = database.record_shard(TEST_DB, CHI, 1, 5, 'Bg', 20, batch)
    assert set(new) == {canonical_form(named('gem')), canonical_form(named('W', 4))}
    print(f"  Shard 2: {len(new)} new, claw already known ✓")

    assert len(database.load_members(TEST_DB, OMEGA, 1)) == 0
    assert database.finished_shards(TEST_DB, CHI, 1) == {(4, 'A_'), (5, 'Bg')}
    assert database.shard_candidates(TEST_DB, CHI, 1, 5) == 20
    loaded = database.load_members(TEST_DB, CHI, 1)
    assert [form for form, _ in loaded] == sorted(form for form, _ in batch)
    assert all(canonical_form(g) == form for form, g in loaded)
    print("  Counts, finished shards and reloaded members ✓")

    assert database.purge_run(TEST_DB, CHI, 1) == 3
    assert database.finished_shards(TEST_DB, CHI, 1) == set()
    print("  Purge forgets the run ✓")
    os.unlink(TEST_DB)
    print("  ✓ Checkpoint OK\n")


def test_lock():
    print("=== Testing job lock ===")
    setup()
    import logging
    logger = logging.getLogger('test')
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    release_lock()
    if _lock_path().exists():
        _lock_path().unlink()
    assert acquire_lock(logger)
    assert _lock_path().read_text() == str(os.getpid())
    assert not acquire_lock(logger)
    print("  Second acquire refused while held ✓")

    # a live owner keeps its lock however old the file is
    _lock_path().write_text(str(os.getppid()))
    old = time.time() - 7200
    os.utime(_lock_path(), (old, old))
    assert not acquire_lock(logger)
    release_lock()
    assert _lock_path().exists(), "released a lock owned by another process"
    print("  Two-hour-old lock of a running process is kept, and not released by us ✓")

    _lock_path().write_text(str(DEAD_PID))
    assert acquire_lock(logger)
    assert _lock_path().read_text() == str(os.getpid())
    print("  Lock of a finished process replaced ✓")

    os.utime(_lock_path(), (old, old))
    touch_lock()
    assert time.time() - _lock_path().stat().st_mtime < 60
    print("  Heartbeat refreshes the lock ✓")

    _lock_path().write_text('garbage')
    os.utime(_lock_path(), (old, old))
    assert acquire_lock(logger)
    print("  Unreadable lock without a heartbeat for an hour replaced ✓")

    release_lock()
    assert not _lock_path().exists()
    print("  ✓ Lock OK\n")


def test_generate_matches_enumerate():
    print("=== Testing sharded generation ===")
    setup()
    for p in (CHI, OMEGA):
        for k in (1, 2):
            expected = enumerate_family(p, k).forms()
            fam = generate_family(p, k, jobs=1, progress=False)
            assert fam.forms() == expected
            print(f"  F({p},{k}) in-process: {len(fam)} members ✓")
    fam = generate_family(CHI, 2, jobs=2, progress=False)
    assert fam.forms() == enumerate_family(CHI, 2).forms()
    print("  F(chi,2) with two workers ✓")
    print("  ✓ Generation OK\n")


def test_resume():
    print("=== Testing resume from checkpoint ===")
    setup()
    if os.path.exists(TEST_DB):
        os.unlink(TEST_DB)

    tasks = plan_shards(2)
    assert len(tasks) > 2
    half = tasks[:len(tasks) // 2]
    for m, root in half:
        _, key, candidates, members = _scan_task(root, m, CHI, 2)
        database.record_shard(TEST_DB, CHI, 2, m, key, candidates, members)
    done = database.finished_shards(TEST_DB, CHI, 2)
    assert len(done) == len(half)
    assert len(plan_shards(2, done)) == len(tasks) - len(half)
    print(f"  Interrupted after {len(half)} of {len(tasks)} shards ✓")

    fam = generate_family(CHI, 2, jobs=1, checkpoint=TEST_DB, progress=False)
    assert len(fam) == 24
    assert fam.forms() == enumerate_family(CHI, 2).forms()
    assert len(database.finished_shards(TEST_DB, CHI, 2)) == len(tasks)
    print("  Resumed run gives the full family, every shard recorded ✓")

    fam = generate_family(CHI, 2, jobs=1, checkpoint=TEST_DB, progress=False)
    assert len(fam) == 24
    print("  A finished checkpoint reloads without scanning ✓")
    os.unlink(TEST_DB)
    print("  ✓ Resume OK\n")


def test_run_generation():
    print("=== Testing run_generation ===")
    setup()
    fam = run_generation(CHI, 1, TEST_OUT, jobs=1, progress=False)
    assert fam is not None and len(fam) == 4
    back = read_family(TEST_OUT)
    assert back.forms() == fam.forms() and back.k == 1
    assert not _lock_path().exists()
    print("  Family file written, lock released ✓")

    import logging
    assert acquire_lock(logging.getLogger('test'))
    assert run_generation(CHI, 1, TEST_OUT, jobs=1, progress=False) is None
    release_lock()
    print("  Locked out while another job runs ✓")
    print("  ✓ Job OK\n")


if __name__ == '__main__':
    test_record_shard_with_diff()
    test_lock()
    test_generate_matches_enumerate()
    test_resume()
    test_run_generation()
    cleanup()
