#!/usr/bin/env python3
"""Download a public table of zeta zero ordinates and verify it.

The raw download is checked against a SHA-256 digest: the one given with
--sha256, else the digest recorded in OUTPUT.sha256 by an earlier fetch.
With neither, the digest is recorded after the structural checks pass, and
later fetches must reproduce it. The output file uses the library format.
The library itself never touches the network.

Usage: fetch_zeros.py OUTPUT [--url URL] [--sha256 HEX] [--min-count 10000]
"""

import argparse
import hashlib
import sys
import urllib.error
import urllib.request
from pathlib import Path

DEFAULT_URL = "https://www-users.cse.umn.edu/~odlyzko/zeta_tables/zeros1"
FIRST_ZERO = 14.134725141735


def download(url, timeout):
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read()
    except (urllib.error.URLError, OSError) as e:
        raise SystemExit(f"fetch_zeros: cannot download {url}: {e}. "
                         "Offline? Use tools/generate_zeros.py or the bundled data/zeros_20k.txt.")


def parse(raw, min_count):
    gammas = []
    for lineno, line in enumerate(raw.decode("ascii").splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            g = float(s)
        except ValueError:
            raise SystemExit(f"fetch_zeros: line {lineno} is not a number: {s!r}")
        if gammas and g <= gammas[-1][0]:
            raise SystemExit(f"fetch_zeros: line {lineno} is not strictly increasing")
        gammas.append((g, s))
    if len(gammas) < min_count:
        raise SystemExit(f"fetch_zeros: only {len(gammas)} zeros, expected at least {min_count} (truncated download?)")
    if abs(gammas[0][0] - FIRST_ZERO) > 1e-6:
        raise SystemExit(f"fetch_zeros: first ordinate {gammas[0][1]} is not {FIRST_ZERO}")
    return [s for _, s in gammas]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("output", type=Path)
    ap.add_argument("--url", default=DEFAULT_URL)
    ap.add_argument("--sha256", help="expected digest of the raw download")
    ap.add_argument("--min-count", type=int, default=10000)
    ap.add_argument("--timeout", type=float, default=60.0)
    args = ap.parse_args(argv)

    raw = download(args.url, args.timeout)
    digest = hashlib.sha256(raw).hexdigest()
    sidecar = args.output.with_name(args.output.name + ".sha256")
    expected = args.sha256 or (sidecar.read_text().split()[0] if sidecar.exists() else None)
    if expected and expected.lower() != digest:
        raise SystemExit(f"fetch_zeros: digest mismatch for {args.url}: got {digest}, expected {expected.lower()}")

    lines = parse(raw, args.min_count)
    args.output.write_text(f"# Imaginary parts of the first {len(lines)} nontrivial zeros of zeta(s)\n"
                           f"# source {args.url} sha256 {digest}\n" + "\n".join(lines) + "\n")
    if not expected:
        sidecar.write_text(f"{digest}  {args.url}\n")
        print(f"recorded digest {digest} in {sidecar}")
    print(f"wrote {len(lines)} zeros to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
