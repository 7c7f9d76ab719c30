"""Kernel backend selection: compiled extension when importable, else pure Python."""

try:
    from subpacket._core import backward_recursion, window_power

    BACKEND = "cython"
except ImportError:  # extension not built
    from subpacket._pycore import backward_recursion, window_power

    BACKEND = "python"

__all__ = ["BACKEND", "backward_recursion", "window_power"]
