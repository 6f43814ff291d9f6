"""Command-line front end.

Subcommands:
  verify    one prime p = 1 (mod 49): certificate(s) on stdout
  classify  one prime p = 1 (mod 14): artiad classification on stdout
  scan      a prime range, with a worker pool and a JSON or CSV report
  selftest  the startup algebra checks

Exit codes: 0 all checks passed, 1 a mathematical comparison failed,
2 invalid input or unusable output path.

Reports are deterministic for a fixed configuration independent of the
worker count; the only field that varies between runs is runtime_seconds.
"""

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import DomainError, InputError
from .prime_field import is_prime
from .selfcheck import run_selfchecks
from .verify import classify_prime, verify_prime

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def primes_in_range(lo: int, hi: int, modulus: int) -> list[int]:
    """Primes p in [lo, hi] with p = 1 (mod modulus), by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = b"\x00" * len(sieve[q * q :: q])
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p] and p % modulus == 1]


def cmd_verify(args) -> int:
    certs = verify_prime(args.prime, gamma=args.generator,
                         ns=None if args.all_n else (1,))
    payload = [c.to_json() for c in certs]
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    bad = any(not c.match or c.discrepancies for c in certs)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_classify(args) -> int:
    cert = classify_prime(args.prime, gamma=args.generator)
    json.dump(cert.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def _scan_one(task) -> list[dict]:
    p, all_n = task
    if (p - 1) % 49 == 0:
        certs = [classify_prime(p)]
        certs.extend(verify_prime(p, ns=None if all_n else (1,)))
    else:
        certs = [classify_prime(p)]
    return [c.to_json() for c in certs]


def _summarize(cert_dicts: list[dict]) -> dict:
    kinds = {}
    mismatches = 0
    discrepancies = []
    first_artiad = None
    for c in cert_dicts:
        if c["n"] is None:  # one classification record per prime
            kind = c["classification"]["kind"]
            kinds[kind] = kinds.get(kind, 0) + 1
            if kind in ("artiad", "hyperartiad") and first_artiad is None:
                first_artiad = c["p"]
        if c["match"] is False:
            mismatches += 1
        for d in c["discrepancies"]:
            discrepancies.append(f"p={c['p']} n={c['n']}: {d}")
    return {
        "ordinary": kinds.get("ordinary", 0),
        "artiad": kinds.get("artiad", 0),
        "hyperartiad": kinds.get("hyperartiad", 0),
        "mismatches": mismatches,
        "discrepancy_flags": discrepancies,
        "first_artiad": first_artiad,
    }


def _write_csv(path: str, cert_dicts: list[dict]) -> None:
    cols = (["p", "gamma", "n", "match", "kind"]
            + [f"predicted_t{i}" for i in range(8)]
            + [f"actual_t{i}" for i in range(8)]
            + ["discrepancies"])
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(cols)
        for c in cert_dicts:
            pred = c["predicted"] if c["predicted"] else [""] * 8
            act = c["actual"] if c["actual"] else [""] * 8
            writer.writerow(
                [c["p"], c["gamma"], "" if c["n"] is None else c["n"],
                 "" if c["match"] is None else c["match"],
                 c["classification"]["kind"]]
                + list(pred) + list(act)
                + ["; ".join(c["discrepancies"])])


def cmd_scan(args) -> int:
    if args.min > args.max:
        raise InputError("scan range is empty the wrong way: min > max")
    if args.jobs < 1:
        raise InputError("jobs must be at least 1")
    start = time.monotonic()
    primes = primes_in_range(args.min, args.max, args.modulus)
    tasks = [(p, args.all_n) for p in primes]
    if args.jobs == 1 or len(tasks) <= 1:
        batches = [_scan_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            batches = list(pool.map(_scan_one, tasks))
    cert_dicts = [c for batch in batches for c in batch]
    cert_dicts.sort(key=lambda c: (c["p"], c["n"] is not None, c["n"] or 0))
    # jobs is execution detail, not content: the report must be byte-identical
    # for any worker count (only runtime_seconds may differ between runs).
    report = {
        "config": {
            "min": args.min,
            "max": args.max,
            "modulus": args.modulus,
            "all_n": args.all_n,
            "format": args.format,
        },
        "version": __version__,
        "summary": _summarize(cert_dicts),
        "certificates": cert_dicts,
        "runtime_seconds": round(time.monotonic() - start, 3),
    }
    try:
        if args.format == "csv":
            _write_csv(args.output, cert_dicts)
        else:
            with open(args.output, "w") as fh:
                json.dump(report, fh, indent=2)
                fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    mismatch = report["summary"]["mismatches"] > 0
    print(f"scanned {len(primes)} primes, "
          f"{report['summary']['mismatches']} mismatches, "
          f"report written to {args.output}")
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_selftest(_args) -> int:
    results = run_selfchecks()
    ok = True
    for name, passed in results:
        print(f"[{'ok' if passed else 'FAIL'}] {name}")
        ok &= passed
    return EXIT_OK if ok else EXIT_MISMATCH


def _prime_arg(value: str) -> int:
    n = int(value)
    if not is_prime(n):
        raise argparse.ArgumentTypeError(f"{n} is not prime")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi49",
        description="Exact Jacobi-sum congruence verification and artiad "
                    "prime classification over F_p.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify the order-49 congruence at one prime")
    v.add_argument("--prime", type=_prime_arg, required=True)
    v.add_argument("--generator", type=int, default=None)
    v.add_argument("--all-n", action="store_true",
                   help="all n in 1..48 instead of n = 1 only")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="artiad classification of one prime")
    c.add_argument("--prime", type=_prime_arg, required=True)
    c.add_argument("--generator", type=int, default=None)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", help="classify/verify every prime in a range")
    s.add_argument("--min", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--modulus", type=int, choices=(14, 49), required=True,
                   help="which residue class of primes to visit")
    s.add_argument("--all-n", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--output", required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_scan)

    t = sub.add_parser("selftest", help="run the startup algebra checks")
    t.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize --version/help to 0
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
