import time
from scalene import scalene_profiler
from lattice_rr.bench import run_random_bench
from lattice_rr.lattice_config import BenchSettings


def benchmark():
    settings = BenchSettings(max_weight=1_000_000, degree=10**12, num_samples=2000, series_compare=False)
    run_random_bench(BenchSettings(num_samples=1, series_compare=False))
    print('start of benchmark')

    start_time = time.perf_counter()
    scalene_profiler.start()

    results = run_random_bench(settings)

    scalene_profiler.stop()
    end_time = time.perf_counter()

    slowest = max(results, key=lambda r: r.fast_seconds)
    print(f'slowest count took {slowest.fast_seconds * 1000:.3f} ms (weights {slowest.weights})')
    print(f'benchmark took {end_time - start_time} seconds for {len(results)} counts')


if __name__ == "__main__":
    benchmark()
