"""Kummer's confluent hypergeometric function M(a, b, z) summed over
its region of interest.
"""
