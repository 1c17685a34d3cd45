"""The core of Kummer: the series algebra, the region of interest solver,
the summation methods and the functions built on them.
"""
