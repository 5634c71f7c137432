__all__ = ["RngStream"]


from .rng_stream import RngStream
