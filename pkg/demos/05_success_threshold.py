"""
How many known images does the attack need?
===========================================

Evaluates the success threshold over image sizes. ``tau = n(n-1)/2`` is the
number of free entries of an SDM built from ``n`` images.
"""
from scramblecrack import min_known_images, success_threshold

for side in (16, 64, 256, 512, 1024, 4096):
    length = side * side
    n = min_known_images(length)
    print(f"{side:>5}x{side:<5} L={length:>9}  needs n >= {n}")

print()
print("tau=1 vs 512x512:", success_threshold(1, 512 * 512))
print("tau=3 vs 512x512:", success_threshold(3, 512 * 512))
