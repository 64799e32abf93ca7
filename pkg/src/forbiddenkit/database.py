import logging
import os
import sqlite3
from datetime import datetime

from .iso import CanonicalForm

logger = logging.getLogger(__name__)


def init_db(db_path: str):
    """Create the checkpoint DB file and ensure the shard and member tables exist."""
    directory = os.path.dirname(db_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    conn = sqlite3.connect(db_path)
    cur = conn.cursor()
    cur.execute(
        """
        CREATE TABLE IF NOT EXISTS shards(
            param TEXT,
            k INTEGER,
            m INTEGER,
            shard TEXT,
            candidates INTEGER,
            members INTEGER,
            finished_at TEXT,
            PRIMARY KEY(param, k, m, shard)
        )
        """
    )
    cur.execute(
        """
        CREATE TABLE IF NOT EXISTS members(
            param TEXT,
            k INTEGER,
            canon TEXT,
            graph6 TEXT,
            n INTEGER,
            PRIMARY KEY(param, k, canon)
        )
        """
    )
    conn.commit()
    return conn


def _canon_key(form: CanonicalForm) -> str:
    # fixed width so that text order matches canonical order within one n
    return f"{form.n:02d}:{form.bits:0{max(1, form.n * (form.n - 1) // 2)}b}"


def index_members_with_diff(cur, param, k, members):
    """
    Insert (CanonicalForm, Graph) pairs; return the forms that were new.
    Works inside the caller's transaction.
    """
    cur.execute("SELECT canon FROM members WHERE param = ? AND k = ?", (str(param), k))
    existing = {row[0] for row in cur.fetchall()}
    new_forms = []
    rows = []
    for form, _ in members:
        key = _canon_key(form)
        if key not in existing:
            new_forms.append(form)
            existing.add(key)
        rows.append((str(param), k, key, form.graph6(), form.n))
    cur.executemany(
        "INSERT OR REPLACE INTO members(param, k, canon, graph6, n) VALUES(?,?,?,?,?)",
        rows
    )
    return new_forms


def record_shard(db_path, param, k, m, shard, candidates, members):
    """
    Store one finished shard and its members in a single transaction.
    `members` is a list of (CanonicalForm, Graph); returns the new forms.
    """
    conn = init_db(db_path)
    cur = conn.cursor()
    try:
        new_forms = index_members_with_diff(cur, param, k, members)
        cur.execute(
            """
            INSERT OR REPLACE INTO shards(param, k, m, shard, candidates, members, finished_at)
            VALUES(?,?,?,?,?,?,?)
            """,
            (str(param), k, m, shard, candidates, len(members),
             datetime.now().isoformat(timespec='seconds'))
        )
        conn.commit()
    except sqlite3.Error:
        conn.rollback()
        raise
    finally:
        conn.close()
    logger.debug(f"shard {m}/{shard}: {candidates} candidates, {len(members)} members ({len(new_forms)} new)")
    return new_forms


def finished_shards(db_path, param, k):
    """Set of (m, shard) pairs already recorded for (param, k)."""
    if not os.path.exists(db_path):
        return set()
    conn = init_db(db_path)
    cur = conn.cursor()
    cur.execute("SELECT m, shard FROM shards WHERE param = ? AND k = ?", (str(param), k))
    done = {(row[0], row[1]) for row in cur.fetchall()}
    conn.close()
    return done


def shard_candidates(db_path, param, k, m):
    """Total candidates scanned over the finished shards of one level."""
    conn = init_db(db_path)
    cur = conn.cursor()
    cur.execute("SELECT COALESCE(SUM(candidates), 0) FROM shards WHERE param = ? AND k = ? AND m = ?",
                (str(param), k, m))
    total = cur.fetchone()[0]
    conn.close()
    return total


def load_members(db_path, param, k):
    """All recorded members of (param, k) as (CanonicalForm, Graph) pairs, sorted."""
    conn = init_db(db_path)
    conn.row_factory = sqlite3.Row
    cur = conn.cursor()
    cur.execute("SELECT canon, graph6 FROM members WHERE param = ? AND k = ?", (str(param), k))
    rows = cur.fetchall()
    conn.close()
    return sorted(_row_to_member(row) for row in rows)


def purge_run(db_path, param, k):
    """Forget every shard and member of one (param, k) run."""
    conn = init_db(db_path)
    cur = conn.cursor()
    cur.execute("DELETE FROM shards WHERE param = ? AND k = ?", (str(param), k))
    cur.execute("DELETE FROM members WHERE param = ? AND k = ?", (str(param), k))
    removed = cur.rowcount
    conn.commit()
    conn.close()
    if removed:
        logger.info(f"Purged {removed} checkpointed members of {param}/{k}")
    return removed


def _row_to_member(row):
    """Convert a members row to a (CanonicalForm, Graph) pair."""
    n_text, bits_text = row['canon'].split(':', 1)
    form = CanonicalForm(int(n_text), int(bits_text, 2))
    return form, form.to_graph()
