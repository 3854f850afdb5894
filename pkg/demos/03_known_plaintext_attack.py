"""
Known-plaintext attack with self-difference matrices
====================================================

Encrypts a handful of natural images under one key, gives the attacker
``n`` plain/cipher pairs, and measures how much of a held-out cipher-image the
recovered key decrypts correctly. The decrypted target images are written
as PGM files for inspection.
"""
import sys
from pathlib import Path

from scramblecrack import PAPER_KEY, EncryptionOracle, GrayImage, decrypt, recovery_rate, save_pgm
from scramblecrack.kpa import kpa_attack_with_report
from scramblecrack.testimages import STANDARD_SET, standard_images

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

images = standard_images()
target, known = STANDARD_SET[0], STANDARD_SET[1:]
oracle = EncryptionOracle(PAPER_KEY, 512 * 512)
target_cipher = oracle.known_pairs([images[target]])[0].c

for n in (2, 3, 4, 5):
    pairs = oracle.known_pairs([images[name] for name in known[:n]])
    ek, report = kpa_attack_with_report(pairs, seed=0)
    recovered = decrypt(target_cipher, ek)
    rate = recovery_rate(recovered, images[target].pixels)
    print(f"n={n}: recovery {rate:6.2f}%  singleton={report.singleton:6d} "
          f"multi={report.multi:6d}  ({report.elapsed:.1f}s)")
    save_pgm(GrayImage(512, 512, recovered), out / f"{target}_kpa_n{n}.pgm")
