from dataclasses import dataclass, field


@dataclass
class OracleSettings:
    max_bruteforce_iterations: int = 50_000_000
    max_series_degree: int = 10_000_000

    def __post_init__(self):
        if self.max_bruteforce_iterations <= 0:
            raise ValueError("Brute-force iteration limit mustn't be negative or zero!")
        if self.max_series_degree < 0:
            raise ValueError("Series degree limit mustn't be negative!")


@dataclass
class UnitySettings:
    imaginary_tolerance: float = 1e-9

    def __post_init__(self):
        if self.imaginary_tolerance <= 0:
            raise ValueError("Imaginary tolerance mustn't be negative or zero!")


@dataclass
class VerifySettings:
    max_weight: int = 30
    max_degree: int = 500
    max_type_order: int = 60
    num_cases: int = 400
    num_float_cases: int = 100
    max_float_order: int = 2000
    seed: int = 7
    num_workers: int = 4
    oracle_config: OracleSettings = field(default_factory=OracleSettings)

    def __post_init__(self):
        if self.max_weight < 1:
            raise ValueError("Max weight mustn't be negative or zero!")
        if self.max_degree < 0:
            raise ValueError("Max degree mustn't be negative!")
        if self.max_type_order < 2 or self.max_float_order < 2:
            raise ValueError("Type orders need to be at least 2!")
        if self.num_cases <= 0 or self.num_float_cases <= 0:
            raise ValueError("Number of cases mustn't be negative or zero!")
        if self.num_workers <= 0:
            raise ValueError("Number of workers mustn't be negative or zero!")


@dataclass
class BenchSettings:
    fib_steps: int = 40
    max_weight: int = 1000
    degree: int = 10**6
    num_samples: int = 20
    seed: int = 7
    series_compare: bool = True
    oracle_config: OracleSettings = field(default_factory=OracleSettings)

    def __post_init__(self):
        if self.fib_steps < 1:
            raise ValueError("Fibonacci index mustn't be negative or zero!")
        if self.max_weight < 1:
            raise ValueError("Max weight mustn't be negative or zero!")
        if self.degree < 0:
            raise ValueError("Degree mustn't be negative!")
        if self.num_samples <= 0:
            raise ValueError("Number of samples mustn't be negative or zero!")
