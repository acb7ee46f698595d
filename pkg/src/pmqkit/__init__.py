"""pmqkit: discrete invariants of finite partially multiplicative quandles."""

__version__ = "0.1.0"
