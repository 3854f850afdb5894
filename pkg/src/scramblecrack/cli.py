"""Command-line front end: ``scramblecrack <command> ...``.

All randomness comes from ``--seed``. Every output file is re-read after
writing, and the exit status is 0 only when that check passes.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import cpa, kpa, metrics
from .cipher import EQUIVALENT_KEY_MAGIC, EquivalentKey, decrypt, encrypt
from .errors import WorkbenchError
from .image_io import GrayImage, load_pgm, write_pgm
from .keystream import derive_keystreams, format_key, load_key, parse_key, random_key
from .oracle import EncryptionOracle

CPA_ATTACKS = {
    "zhang1": cpa.zhang_method1,
    "zhang2": cpa.zhang_method2,
    "optimal": cpa.optimal_cpa,
}


def _write_checked(path, data: bytes) -> None:
    path = Path(path)
    path.write_bytes(data)
    if path.read_bytes() != data:
        raise OSError(f"read-back of {path} does not match what was written")


def _load_key_for(path, length: int) -> EquivalentKey:
    """Accept either a six-number key file or a recovered ``EQKY`` file."""
    data = Path(path).read_bytes()
    if data[:4] == EQUIVALENT_KEY_MAGIC:
        ek = EquivalentKey.from_bytes(data)
        if len(ek) != length:
            raise WorkbenchError(f"equivalent key covers L={len(ek)}, image has L={length}")
        return ek
    return EquivalentKey.from_keystreams(derive_keystreams(parse_key(data.decode("utf-8")), length))


def _single(paths, what: str):
    if not paths or len(paths) != 1:
        raise WorkbenchError(f"{what} takes exactly one --in file")
    return paths[0]


def cmd_keygen(args) -> int:
    key = random_key(np.random.default_rng(args.seed), length=args.L or 262144)
    text = format_key(key)
    if args.out:
        _write_checked(args.out, text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    return 0


def _transform(args, func) -> int:
    img = load_pgm(_single(args.inputs, args.command))
    ek = _load_key_for(args.key, img.size)
    out = GrayImage(img.width, img.height, func(img.pixels, ek))
    _write_checked(args.out, write_pgm(out))
    return 0


def cmd_encrypt(args) -> int:
    return _transform(args, encrypt)


def cmd_decrypt(args) -> int:
    return _transform(args, decrypt)


def _attack_length(args) -> int:
    if args.L:
        return args.L
    if args.inputs:
        return load_pgm(args.inputs[0]).size
    raise WorkbenchError("give the image size with --L or a sample image with --in")


def cmd_attack(args) -> int:
    key = load_key(args.key)
    if args.method == "kpa":
        if not args.inputs:
            raise WorkbenchError("kpa needs known plain-images via --in")
        images = [load_pgm(p) for p in args.inputs]
        n = args.n or len(images)
        if n > len(images):
            raise WorkbenchError(f"--n {n} exceeds the {len(images)} images given")
        oracle = EncryptionOracle(key, images[0].size)
        pairs = oracle.known_pairs(images[:n])
        ek, stats = kpa.kpa_attack_with_report(pairs, seed=args.seed)
        report = stats.text()
    else:
        length = _attack_length(args)
        oracle = EncryptionOracle(key, length)
        attack = CPA_ATTACKS[args.method]
        ek = attack(oracle, d=args.d) if args.method == "optimal" else attack(oracle)
        report = f"attack: {args.method}\nL: {length}\nquery_count: {oracle.query_count}\n"
        if args.method == "optimal":
            report += f"d: {args.d}\n"
        report += f"seed: {args.seed}\n"
    _write_checked(args.out, ek.to_bytes())
    if EquivalentKey.load(args.out) != ek:
        raise WorkbenchError(f"{args.out} did not round-trip")
    _write_checked(str(args.out) + ".report.txt", report.encode("utf-8"))
    sys.stdout.write(report)
    return 0


def cmd_eval(args) -> int:
    if not args.inputs or len(args.inputs) != 2:
        raise WorkbenchError("eval takes --in RECOVERED TRUTH")
    recovered, truth = (load_pgm(p) for p in args.inputs)
    if (recovered.width, recovered.height) != (truth.width, truth.height):
        raise WorkbenchError(
            f"size mismatch: {recovered.width}x{recovered.height} vs {truth.width}x{truth.height}")
    print(f"{metrics.recovery_rate(recovered.pixels, truth.pixels):.2f}")
    if args.out:
        diff = metrics.difference_image(recovered.pixels, truth.pixels)
        _write_checked(args.out, metrics.histogram_csv(metrics.histogram(diff)).encode("utf-8"))
    return 0


def cmd_threshold(args) -> int:
    if not args.L:
        raise WorkbenchError("threshold needs --L")
    print(kpa.min_known_images(args.L))
    return 0


def cmd_hist_diff(args) -> int:
    """Histogram of the difference of two cipher-images under one key."""
    if not args.inputs or len(args.inputs) != 2:
        raise WorkbenchError("hist-diff takes --in A B")
    a, b = (load_pgm(p) for p in args.inputs)
    if a.size != b.size:
        raise WorkbenchError("hist-diff images must have the same pixel count")
    ek = _load_key_for(args.key, a.size)
    diff = metrics.difference_image(encrypt(a.pixels, ek), encrypt(b.pixels, ek))
    csv = metrics.histogram_csv(metrics.histogram(diff))
    if args.out:
        _write_checked(args.out, csv.encode("utf-8"))
    else:
        sys.stdout.write(csv)
    return 0


COMMANDS = {
    "keygen": cmd_keygen,
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "attack": cmd_attack,
    "eval": cmd_eval,
    "threshold": cmd_threshold,
    "hist-diff": cmd_hist_diff,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--key", help="key file (six numbers) or recovered EQKY file")
    common.add_argument("--in", dest="inputs", nargs="+", metavar="PATH", help="input file(s)")
    common.add_argument("--out", help="output path")
    common.add_argument("--n", type=int, help="number of known plain-images (kpa)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--d", type=int, default=0, help="constant gray value for the optimal CPA")
    common.add_argument("--L", type=int, help="number of pixels")

    parser = argparse.ArgumentParser(prog="scramblecrack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "attack":
            p.add_argument("method", choices=[*CPA_ATTACKS, "kpa"])
    return parser


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise WorkbenchError(f"{args.command} requires {', '.join(missing)}")


REQUIRED = {
    "encrypt": ("key", "out"),
    "decrypt": ("key", "out"),
    "attack": ("key", "out"),
    "hist-diff": ("key",),
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _require(args, *REQUIRED.get(args.command, ()))
        return COMMANDS[args.command](args)
    except (WorkbenchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
