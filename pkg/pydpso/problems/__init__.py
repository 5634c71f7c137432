__all__ = [
    "AllocationInstance",
    "generate_grid_instance",
    "allocation_fitness",
    "allocation_oracle",
    "allocation_worst",
    "write_instance",
    "read_instance",
    "BenchmarkSpec",
    "BENCHMARKS",
    "get_benchmark",
    "eval_benchmark",
    "BinaryCodec",
    "decode",
    "encode",
    "make_problem",
]


from .allocation import (
    AllocationInstance,
    generate_grid_instance,
    allocation_fitness,
    allocation_oracle,
    allocation_worst,
    write_instance,
    read_instance,
)
from .benchmarks import BenchmarkSpec, BENCHMARKS, get_benchmark, eval_benchmark
from .codec import BinaryCodec, decode, encode
from .factory import make_problem
