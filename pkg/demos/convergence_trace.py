"""
Watching the power iteration converge
=====================================

The power iteration keeps a bracket [lower, upper] around the spectral
radius of the shifted tensor.  Print how the bracket closes on the karate
graph, with the shift taken back out.
"""

import subgraph_evc as sev

g = sev.karate()
t = sev.build_mixed_tensor(g, sev.builtin_pattern("k3"))

trace = []
res = sev.zqw_iterate(t, callback=lambda it, lo, hi: trace.append((it, lo, hi)))

for it, lo, hi in trace[:5] + trace[-3:]:
    lo, hi = lo - res.shift, hi - res.shift
    print(f"iter {it:4d}  lower {lo:.10f}  upper {hi:.10f}  gap {hi - lo:.2e}")
print(f"\nrho = {res.rho:.10f} after {res.iterations} iterations")
print(f"residual (inf-norm) = {sev.residual(t, res.rho, res.x):.2e}")
