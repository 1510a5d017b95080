"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import itertools
import time
from array import array

from dejean import _kernels
from dejean.carpi import apply_f, carpi_params
from dejean.kernel import _states
from dejean.pansiot import gamma
from dejean.words import thue_morse


def workloads():
    tm = array("i", thue_morse(4096).bits)
    params = carpi_params(27)
    coded = array("i", gamma(apply_f((1, 1, 1, 2) * 3, params), 27).letters)
    triples = [bytes(apply_f(w, params).bits) for w in itertools.product(range(1, 5), repeat=3)]
    gen_word = array("i", [1, 1, 1, 2] * 100)
    gen_states = _states(gen_word)

    def max_exponent_tm(k):
        k.max_exponent(tm)

    def threshold_scan_gamma(k):
        k.first_exceeding(coded, 27, 26)

    def stabilizer_scan_27(k):
        for bits in triples:
            table = k.inverse_prefix_table(bits, 27)
            for r in (14, 15):
                length = r * 26
                k.stabilizing_starts(table, 27, length, r + 1, len(bits) - length + 1)

    def unreduced_one_triple(k):
        table = k.inverse_prefix_table(triples[0], 27)
        k.first_short_stabilizer(table, 27, len(triples[0]), 26 * 26 - 1)

    def kernel_check_400(k):
        for t in range(len(gen_word)):
            k.kernel_clean_at(gen_word, gen_states, t, 30)

    return [max_exponent_tm, threshold_scan_gamma, stabilizer_scan_27,
            unreduced_one_triple, kernel_check_400]


def best_of(fn, module, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(module)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernels.available()
    print(f"{'workload':<24}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for fn in workloads():
        row = [best_of(fn, _kernels.module(b), args.repeat) for b in backends]
        line = f"{fn.__name__:<24}" + "".join(f"{t:>11.4f}s" for t in row)
        if len(row) == 2:
            line += f"{row[0] / row[1]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
