"""
Boundary-Entropy Toolkit

Exact generating functions of the boundary loop statistic of the dense
O(1) loop model on cylinders and strips, their large-size asymptotics,
and the fitter that extracts expansion coefficients from exact data.
"""

__version__ = "1.0.0"
__author__ = "Boundary-Entropy Team"
