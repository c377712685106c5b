from .throughput import frames_per_second, measure_throughput
