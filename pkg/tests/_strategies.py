"""Shared hypothesis strategies for small scheduling instances."""

from hypothesis import strategies as st

from srptlab import Instance, Job


@st.composite
def instances(draw, max_n=5, max_m=3, max_processing=4, max_arrival=4):
    """Small arbitrary instances, sized to fit the exhaustive-search ceiling."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    jobs = tuple(
        Job(
            id=i,
            arrival=draw(st.integers(0, max_arrival)),
            processing=draw(st.integers(1, max_processing)),
        )
        for i in range(1, n + 1)
    )
    return Instance(jobs=jobs, machines=m)
