"""Shell commands exposing LRDPyground functionalities.

This module contains the shell commands that can be used to interact with LRDPyground.

pyground-lrd
============

``pyground-lrd`` simulates paths and runs the Monte Carlo experiments::

    pyground-lrd simulate --beta 0.7 --n 1024 --seed 1 --out path.csv
    pyground-lrd scalings --beta 0.8 --n 4096
    pyground-lrd gof --stat ks --estimator mean --beta 0.65 --n 4096 --reps 200 --out results/
    pyground-lrd reduction-check --beta 0.65 --n-grid 1024 4096 16384 --reps 100
    pyground-lrd experiment mean_negligibility.json --out results/ --jobs 4
    pyground-lrd report results/mean_negligibility_results.csv

The bundled reference experiments can be run by name, the ``experiment``
command exits with code ``1`` when any of their checks fails.
When ``--out`` is omitted, files are written in ``$LRDPYGROUND_OUTPUT_DIR``
or in the current directory.
"""
