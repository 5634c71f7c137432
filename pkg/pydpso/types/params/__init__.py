__all__ = ["DpsoParams", "OmpcdpsoParams", "GaParams", "BaParams"]


from .params import DpsoParams, OmpcdpsoParams, GaParams, BaParams
