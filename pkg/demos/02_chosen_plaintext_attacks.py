"""
Chosen-plaintext attacks and their query cost
=============================================

Runs Zhang's Method I and II and the optimal attack against an oracle for
several image sizes and prints how many chosen images each one needed.
"""
import time

from scramblecrack import PAPER_KEY, EncryptionOracle, optimal_cpa, zhang_method1, zhang_method2

attacks = {"method I": zhang_method1, "method II": zhang_method2, "optimal": optimal_cpa}

print(f"{'L':>8} {'attack':>10} {'queries':>8} {'exact':>6} {'seconds':>8}")
for side in (16, 64, 256, 512):
    length = side * side
    for name, attack in attacks.items():
        if name == "method I" and length > 4096:
            continue  # one query per pixel; gets slow quickly
        oracle = EncryptionOracle(PAPER_KEY, length)
        start = time.perf_counter()
        ek = attack(oracle)
        took = time.perf_counter() - start
        print(f"{length:>8} {name:>10} {oracle.query_count:>8} {str(ek == oracle.reveal()):>6} {took:>8.2f}")
