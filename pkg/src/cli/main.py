"""
Command-line front end: rank, unrank, count, enumerate, verify, bench.

Exit codes: 0 success, 2 invalid input or usage, 3 verification mismatch.
Counts are printed as decimal strings in JSON mode.
"""
import argparse
import json
import logging
import sys
import time
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from pydantic import ValidationError
from tqdm import tqdm

from config.settings import APP_DESCRIPTION, APP_NAME, APP_VERSION, BENCH_SEED, LOG_FORMAT, LOG_LEVEL
from src.cli.config import CliConfig
from src.errors import ConventionError, NecklaceError
from src.oracle.brute_force import enumerate_classes, oracle_rank
from src.ranking.enclosing_rank import enclosing_memo_states
from src.ranking.necklace_rank import count_necklaces
from src.ranking.symmetric_rank import symmetric_memo_states
from src.ranking.unlabelled_rank import (
    count_unlabelled,
    count_unlabelled_lyndon,
    rank_unlabelled,
    rank_unlabelled_lyndon,
    unrank_unlabelled,
)
from src.words.word_core import canonical_unlabelled, is_canonical_unlabelled

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3

COMPONENTS = {
    "necklace": "rank_necklace",
    "symmetric": "rank_symmetric",
    "enclosing": "rank_enclosing",
    "asymmetric": "rank_asymmetric",
    "unlabelled": "rank_total",
}


def _emit(config: CliConfig, payload: Dict, text_lines: List[str]) -> None:
    if config.output == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_rank(config: CliConfig) -> int:
    word = config.word
    original = word
    if not is_canonical_unlabelled(word):
        if not config.canonicalize:
            print(f"❌ {word} is not a canonical unlabelled representative", file=sys.stderr)
            return EXIT_INVALID
        word = canonical_unlabelled(word)
        logger.warning(f"Canonicalized {original} to {word}")

    m = config.length or len(word)
    breakdown = rank_unlabelled(word, m)
    counts = breakdown.to_dict()
    payload = {"word": word, "length": m, "set": config.selector}
    payload.update({key: str(value) for key, value in counts.items()})

    lines = []
    if word != original:
        lines.append(f"canonicalized {original} -> {word}")
    if config.selector == "lyndon":
        if m != len(word):
            print("❌ the lyndon selector ranks at the word's own length only", file=sys.stderr)
            return EXIT_INVALID
        lyndon = rank_unlabelled_lyndon(word)
        payload["rank_lyndon"] = str(lyndon)
        lines.append(f"{word} (length {m}) lyndon rank: {lyndon}")
    else:
        lines.append(f"{word} (length {m}) {config.selector} rank: {counts[COMPONENTS[config.selector]]}")
    lines.extend(f"  {key}: {value}" for key, value in counts.items())
    _emit(config, payload, lines)
    return EXIT_OK


def cmd_unrank(config: CliConfig) -> int:
    word = unrank_unlabelled(config.k, config.length)
    _emit(config, {"rank": str(config.k), "length": config.length, "word": word}, [word])
    return EXIT_OK


def cmd_count(config: CliConfig) -> int:
    n = config.length
    if config.selector == "necklace":
        count = count_necklaces(n)
    elif config.selector == "lyndon":
        count = count_unlabelled_lyndon(n)
    elif config.selector == "unlabelled":
        count = count_unlabelled(n)
    else:
        print(f"❌ count supports necklace, lyndon and unlabelled, not {config.selector}", file=sys.stderr)
        return EXIT_INVALID
    _emit(config, {"length": n, "set": config.selector, "count": str(count)}, [str(count)])
    return EXIT_OK


def cmd_enumerate(config: CliConfig) -> int:
    table = enumerate_classes(config.length)
    if config.output == "json":
        for line in table.to_json_lines():
            print(line)
    else:
        for representative in table.representatives:
            print(representative)
    return EXIT_OK


def _verify_word(word: str, m: int) -> List[Dict]:
    mismatches = []
    try:
        computed = rank_unlabelled(word, m).to_dict()
    except ConventionError as e:
        return [{"word": word, "m": m, "component": "tripwire", "dp": str(e), "oracle": ""}]
    for selector, key in COMPONENTS.items():
        expected = oracle_rank(word, m, selector)
        if computed[key] != expected:
            mismatches.append({"word": word, "m": m, "component": selector, "dp": computed[key], "oracle": expected})
    return mismatches


def cmd_verify(config: CliConfig) -> int:
    mismatches: List[Dict] = []
    checked = []
    for n in range(1, config.max_length + 1):
        representatives = enumerate_classes(n).representatives
        for word in tqdm(representatives, desc=f"length {n}", file=sys.stderr, leave=False):
            for m in range(1, n + 1):
                mismatches.extend(_verify_word(word, m))
        checked.append({"length": n, "classes": len(representatives)})

    summary = pd.DataFrame(checked)
    if config.output == "json":
        print(json.dumps({
            "checked": [{"length": int(row.length), "classes": int(row.classes)} for row in summary.itertuples()],
            "mismatches": [{key: str(value) for key, value in row.items()} for row in mismatches],
        }))
    else:
        print(summary.to_string(index=False))
        if mismatches:
            print(pd.DataFrame(mismatches).to_string(index=False))

    if mismatches:
        print(f"❌ {len(mismatches)} mismatches against the oracle", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"✅ all classes up to length {config.max_length} agree with the oracle", file=sys.stderr)
    return EXIT_OK


def _bench_word(n: int, rng: np.random.Generator) -> str:
    symbols = rng.integers(0, 2, size=n)
    return canonical_unlabelled("".join(str(int(s)) for s in symbols))


def cmd_bench(config: CliConfig) -> int:
    rng = np.random.default_rng(BENCH_SEED if config.seed is None else config.seed)
    rows = []
    for n in config.lengths:
        word = _bench_word(n, rng)
        start = time.perf_counter()
        breakdown = rank_unlabelled(word)
        elapsed = time.perf_counter() - start
        row = {"length": n, "word": word, "seconds": round(elapsed, 4), "rank_total": str(breakdown.rank_total)}
        row.update({f"{name}_states": size for name, size in symmetric_memo_states(word).items()})
        row.update({f"enc_{name}_states": size for name, size in enclosing_memo_states(word).items()})
        rows.append(row)
        logger.info(f"bench n={n}: {elapsed:.3f}s, {row['beta_states']} beta states, {row['enc_c_states']} C states")

    report = pd.DataFrame(rows)
    fitted = report[report["beta_states"] > 0]
    degree = None
    if fitted["length"].nunique() >= 2:
        degree = float(np.polyfit(np.log(fitted["length"]), np.log(fitted["beta_states"]), 1)[0])

    if config.output == "json":
        print(json.dumps({"rows": json.loads(report.to_json(orient="records")), "beta_state_degree": degree}))
    else:
        print(report.to_string(index=False))
        if degree is not None:
            print(f"beta memo states grow like n^{degree:.2f}")
    return EXIT_OK


COMMANDS = {
    "rank": cmd_rank,
    "unrank": cmd_unrank,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="necklace-rank", description=APP_DESCRIPTION)
    parser.add_argument("--json", dest="output", action="store_const", const="json", default="text",
                        help="Machine-readable output")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    rank = commands.add_parser("rank", help="Rank a word among unlabelled necklaces")
    rank.add_argument("word")
    rank.add_argument("--length", type=int, help="Rank among classes of this length (default |word|)")
    rank.add_argument("--set", dest="selector", default="unlabelled",
                      choices=["unlabelled", "necklace", "symmetric", "enclosing", "asymmetric", "lyndon"])
    rank.add_argument("--no-canonicalize", dest="canonicalize", action="store_false",
                      help="Reject non-canonical words instead of canonicalizing them")

    unrank = commands.add_parser("unrank", help="Class representative at a given rank")
    unrank.add_argument("k", type=int)
    unrank.add_argument("--length", type=int, required=True)

    count = commands.add_parser("count", help="Number of classes of a length")
    count.add_argument("--length", type=int, required=True)
    count.add_argument("--set", dest="selector", default="unlabelled", choices=["unlabelled", "necklace", "lyndon"])

    enumerate_ = commands.add_parser("enumerate", help="List class representatives (oracle)")
    enumerate_.add_argument("--length", type=int, required=True)

    verify = commands.add_parser("verify", help="Compare every rank component with the oracle")
    verify.add_argument("--max-length", type=int, default=None)

    bench = commands.add_parser("bench", help="Time full ranks and measure DP memo sizes")
    bench.add_argument("--lengths", type=lambda text: [int(part) for part in text.split(",")], default=None)
    bench.add_argument("--seed", type=int, default=None)
    return parser


def parse_config(argv: Optional[List[str]] = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    return CliConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    except (ValidationError, NecklaceError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INVALID

    logging.basicConfig(
        level=logging.DEBUG if config.verbose else LOG_LEVEL,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    try:
        return COMMANDS[config.subcommand](config)
    except ConventionError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except NecklaceError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
