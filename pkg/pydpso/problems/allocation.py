from logging import getLogger
from pathlib import Path
from typing import Sequence, Tuple, Union

import numpy as np

from ..exception import InvalidParametersError
from ..types import Genome

logger = getLogger(__name__)

Point = Tuple[float, float]


class AllocationInstance:
    """Centers, demand points and their distance matrix

    Args:
        centers (``Sequence[tuple]``):
            ``N`` center coordinates ``(x, y)``

        demands (``Sequence[tuple]``):
            ``M`` demand coordinates ``(x, y)``

    Attributes:
        dist (:class:`numpy.ndarray`):
            ``M x N`` Euclidean distances, ``dist[j][i]`` between demand ``j`` and center ``i``
    """

    def __init__(
        self, centers: Sequence[Point], demands: Sequence[Point]
    ) -> None:
        centers = np.array(centers, dtype=np.float64).reshape(-1, 2)
        demands = np.array(demands, dtype=np.float64).reshape(-1, 2)

        if len(centers) < 1:
            raise InvalidParametersError("at least one center is required")
        elif len(demands) < 1:
            raise InvalidParametersError("at least one demand point is required")

        delta = demands[:, None, :] - centers[None, :, :]
        dist = np.hypot(delta[..., 0], delta[..., 1])

        for array in (centers, demands, dist):
            array.setflags(write=False)

        self.centers = centers
        self.demands = demands
        self.dist = dist
        self._rows = np.arange(len(demands))

    @property
    def n_centers(self) -> int:
        return len(self.centers)

    @property
    def n_demands(self) -> int:
        return len(self.demands)

    def __repr__(self) -> str:
        return "AllocationInstance(M={}, N={})".format(self.n_demands, self.n_centers)

    def assigned_distances(self, genes: np.ndarray) -> np.ndarray:
        return self.dist[self._rows, genes]


def generate_grid_instance(
    rows: int,
    cols: int,
    spacing: float = 1.0,
    quadrant_centers: bool = True,
    centers: Sequence[Point] = None,
) -> AllocationInstance:
    """Regular ``rows x cols`` grid of demand points

    Demand ``j = r * cols + c`` sits at ``(r * spacing, c * spacing)`` (row-major, origin at 0).

    Args:
        rows (``int``), cols (``int``):
            Grid shape, both at least 2

        spacing (``float``, *optional*):
            Distance between neighbouring grid points. Defaults to ``1.0``

        quadrant_centers (``bool``, *optional*):
            Place 4 centers at the centroids of the four equal grid quadrants. Needs even ``rows`` and ``cols``. Defaults to ``True``

        centers (``Sequence[tuple]``, *optional*):
            Explicit centers, used when ``quadrant_centers`` is ``False``. Defaults to one center at the grid centroid

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`
    """

    if rows < 2 or cols < 2:
        raise InvalidParametersError("rows and cols must be at least 2")
    elif not spacing > 0:
        raise InvalidParametersError("spacing must be positive")
    elif quadrant_centers and centers is not None:
        raise InvalidParametersError("pass either quadrant_centers or centers, not both")

    r, c = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    demands = np.column_stack([r.ravel() * spacing, c.ravel() * spacing])

    if quadrant_centers:
        if rows % 2 or cols % 2:
            raise InvalidParametersError(
                "a {}x{} grid cannot be split into four equal quadrants".format(rows, cols)
            )
        half_r, half_c = rows // 2, cols // 2
        grid = demands.reshape(rows, cols, 2)
        centers = [
            tuple(grid[r0 : r0 + half_r, c0 : c0 + half_c].reshape(-1, 2).mean(axis=0))
            for r0 in (0, half_r)
            for c0 in (0, half_c)
        ]
    elif centers is None:
        centers = [tuple(demands.mean(axis=0))]

    instance = AllocationInstance(centers, demands)
    logger.debug(
        "Generated {}x{} grid with {} centers (spacing {})".format(
            rows, cols, instance.n_centers, spacing
        )
    )
    return instance


def allocation_fitness(instance: AllocationInstance, genome: Genome) -> float:
    """Total distance from every demand to its assigned center"""
    return float(instance.assigned_distances(genome.genes).sum())


def allocation_oracle(instance: AllocationInstance) -> Tuple[Genome, float]:
    """Exact optimum: every demand goes to its nearest center

    The objective is separable per demand, so this is the global minimum.
    Ties go to the lowest center index.

    Returns:
        ``(genome, fitness)``
    """

    genome = Genome(np.argmin(instance.dist, axis=1))
    return genome, allocation_fitness(instance, genome)


def allocation_worst(instance: AllocationInstance) -> float:
    """Fitness of assigning every demand to its farthest center"""
    return allocation_fitness(instance, Genome(np.argmax(instance.dist, axis=1)))


def write_instance(instance: AllocationInstance, path: Union[str, Path]) -> Path:
    """Write the plain-text instance format

    Header ``M N``, then ``N`` center lines, then ``M`` demand lines, each ``x y``
    with 17 significant digits.

    Returns:
        :class:`pathlib.Path`: The written file
    """

    path = Path(path)
    lines = ["{} {}".format(instance.n_demands, instance.n_centers)]
    for x, y in np.vstack([instance.centers, instance.demands]).tolist():
        lines.append("{:.17g} {:.17g}".format(x, y))

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    logger.info("Instance written to {}".format(path))
    return path


def read_instance(path: Union[str, Path]) -> AllocationInstance:
    """Read a file written by :func:`write_instance`

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If the file is malformed
    """

    path = Path(path)
    lines = [line.split() for line in path.read_text().splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise InvalidParametersError("{}:1: header must be 'M N'".format(path))

    try:
        m, n = int(lines[0][0]), int(lines[0][1])
    except ValueError:
        raise InvalidParametersError("{}:1: header must hold two integers".format(path))

    if len(lines) != 1 + n + m:
        raise InvalidParametersError(
            "{}: expected {} coordinate lines, found {}".format(path, n + m, len(lines) - 1)
        )

    points = []
    for number, parts in enumerate(lines[1:], start=2):
        if len(parts) != 2:
            raise InvalidParametersError("{}:{}: expected 'x y'".format(path, number))
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise InvalidParametersError("{}:{}: coordinates must be numbers".format(path, number))

    return AllocationInstance(points[:n], points[n:])
