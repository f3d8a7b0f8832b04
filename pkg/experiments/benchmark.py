import datetime
import os
import random
import time

import pandas as pd

from singularities import config
from singularities.errors import HypothesisError
from singularities.helpers import generate_random_swh
from singularities.padic import count_mod, good_prime
from singularities.toric import snc_resolution
from singularities.zeta import igusa_specialize, predict_counts

METHODS = ["hensel", "brute"]


def run_single_experiment(f, p, m, method):
    """
    Count solutions of f mod p^m with one method and time it.
    """
    start_time = time.perf_counter()
    count = count_mod(f, p, m, method)
    runtime = time.perf_counter() - start_time
    return count, runtime


def predicted_counts(f, p, m_max):
    """Counts from the Igusa zeta function, or None at a bad prime."""
    if not good_prime(f, None, p):
        return None
    try:
        res = snc_resolution(f)
    except HypothesisError:
        return None
    return predict_counts(igusa_specialize(res, p), p, f.nvars, m_max)


def print_summary(summary):
    """
    Print a clearly labeled statistical summary.
    """
    print(f"\n--- Oracle Summary ({int(summary['runs'].sum())} counts) ---")
    print(summary.to_string(index=False, float_format=lambda x: f"{x:.6f}"))


def default_corpus(n, seed=0):
    rng = random.Random(seed)
    return [generate_random_swh(rng)[0] for _ in range(n)]


def run_benchmark(corpus=None, primes=config.DEFAULT_PRIMES, m_max=3, save_csv=True, out_dir="results"):
    """
    Count every polynomial of the corpus mod p^m with both methods and
    compare with the Igusa prediction where p is good.
    """
    corpus = corpus if corpus is not None else default_corpus(10)
    rows = []
    for i, f in enumerate(corpus, start=1):
        for p in primes:
            predicted = predicted_counts(f, p, m_max)
            for m in range(1, m_max + 1):
                for method in METHODS:
                    if method == "brute" and p ** (m * f.nvars) > config.BRUTE_FORCE_LIMIT:
                        continue
                    count, runtime = run_single_experiment(f, p, m, method)
                    rows.append({
                        "polynomial": str(f), "p": p, "m": m, "method": method,
                        "count": count, "runtime_seconds": runtime,
                        "predicted": predicted[m - 1] if predicted else None,
                    })
                    print(f"#{i:2} {str(f):<28} p={p:2} m={m} {method:<6} N={count:<8} "
                          f"time={runtime:.4f}s")

    runs = pd.DataFrame(rows, columns=["polynomial", "p", "m", "method", "count",
                                       "runtime_seconds", "predicted"])
    runs["agrees"] = runs["predicted"].isna() | (runs["predicted"] == runs["count"])
    summary = (
        runs.groupby("method")
        .agg(runs=("count", "size"),
             time_mean_seconds=("runtime_seconds", "mean"),
             time_std_seconds=("runtime_seconds", "std"),
             disagreements=("agrees", lambda s: int((~s).sum())))
        .reset_index()
        .fillna({"time_std_seconds": 0.0})
    )
    print_summary(summary)

    if save_csv:
        os.makedirs(out_dir, exist_ok=True)
        timestamp = datetime.datetime.now().strftime("%Y%m%d-%H%M%S")
        runs_path = os.path.join(out_dir, f"benchmark_runs_{timestamp}.csv")
        summary_path = os.path.join(out_dir, f"benchmark_summary_{timestamp}.csv")
        runs.to_csv(runs_path, index=False)
        summary.to_csv(summary_path, index=False)
        print(f"\n{'=' * 70}\n📁 FILES SAVED\n{'=' * 70}")
        print(f"✅ Detailed run results: {runs_path}")
        print(f"✅ Statistical summary:  {summary_path}\n{'=' * 70}")

    return runs, summary


if __name__ == "__main__":
    run_benchmark(save_csv=True)
