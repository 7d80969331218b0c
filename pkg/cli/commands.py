"""
Subcommand handlers.

Each handler takes parsed arguments plus GlobalOptions, calls into the engine
and returns a Report. Handlers never print; main.py renders and decides the
exit code.
"""

from bohr.collapse import collapse_config, simulate_collapse, write_trajectory_csv
from bohr.config import NUMERIC_TOL, QUANTIZATION_TOL
from bohr.constants import get_constants
from bohr.derivation import run_derivation_checks
from bohr.errors import VerificationError
from bohr.log import get_logger
from bohr.model import quantized_orbit
from bohr.spectra import series, series_limit
from bohr.units import convert

from .config import EXIT_FAILURE, EXIT_OK
from .render import Report, format_number

log = get_logger("cli")

ORBIT_CSV_COLUMNS = ["Z", "n", "r_m", "v_mps", "f_hz", "Ek_J", "Ep_J", "E_J", "E_eV", "L_Js"]


def cmd_constants(opts):
    k = get_constants(opts.constants)
    rows = [
        {"symbol": symbol, "value": value, "unit": unit, "provenance": provenance}
        for symbol, value, unit, provenance in k.rows()
    ]
    return Report(
        command="constants",
        constants=k.provenance,
        columns=["symbol", "value", "unit", "provenance"],
        rows=rows,
    )


def cmd_orbit(Z, n, opts):
    k = get_constants(opts.constants)
    orbit = quantized_orbit(Z, n, k)
    row = {
        "Z": orbit.Z,
        "n": orbit.n,
        "r_m": orbit.r.value,
        "v_mps": orbit.v.value,
        "f_hz": orbit.f.value,
        "Ek_J": orbit.E_k.value,
        "Ep_J": orbit.E_p.value,
        "E_J": orbit.E.value,
        "E_eV": convert(orbit.E, "eV", k),
        "L_Js": orbit.L.value,
        "L_hbar": orbit.L_over_hbar,
    }
    return Report(
        command="orbit",
        constants=k.provenance,
        columns=ORBIT_CSV_COLUMNS + ["L_hbar"],
        csv_columns=ORBIT_CSV_COLUMNS,
        rows=[row],
    )


def cmd_verify(n_max, step, opts):
    k = get_constants(opts.constants)
    try:
        checks = run_derivation_checks(n_max, step, k)
    except VerificationError as exc:
        log.error("%s", exc)
        checks = exc.checks

    rows = []
    status = EXIT_OK
    for check in checks:
        ok = check.residual_quantization <= QUANTIZATION_TOL and check.residual_numeric <= NUMERIC_TOL
        if not ok:
            status = EXIT_FAILURE
            log.error("residual breach at n=%d", check.n)
        rows.append({
            "n": check.n,
            "f_hz": check.f.value,
            "dEdf_analytic_Js": check.dEdf_system_analytic.value,
            "dEdf_numeric_Js": check.dEdf_system_numeric.value,
            "dEdf_planck_Js": check.dEdf_planck.value,
            "L_Js": check.L.value,
            "residual_numeric": check.residual_numeric,
            "residual_quantization": check.residual_quantization,
            "minimum": check.is_minimum,
        })
    if len(checks) < n_max:
        status = EXIT_FAILURE

    return Report(
        command="verify",
        constants=k.provenance,
        columns=list(rows[0]) if rows else ["n"],
        rows=rows,
        meta={"step": step, "quantization_tol": QUANTIZATION_TOL, "numeric_tol": NUMERIC_TOL},
        notes=[f"{'PASS' if status == EXIT_OK else 'FAIL'}: 2 pi L = n h for n = 1..{n_max}"],
        status=status,
    )


def _line_value(energy, frequency, wavelength, unit, k):
    if unit in ("nm", "m"):
        return convert(wavelength, unit)
    if unit == "eV":
        return convert(energy, "eV", k)
    return convert(frequency, "Hz")


def cmd_spectrum(Z, n_lower, count, unit, opts):
    k = get_constants(opts.constants)
    lines = series(Z, n_lower, count, k)
    value_column = f"line_{unit}"
    rows = [
        {
            "Z": line.Z,
            "n_upper": line.n_upper,
            "n_lower": line.n_lower,
            "energy_J": line.delta_E.value,
            "frequency_Hz": line.photon_frequency.value,
            "wavelength_m": line.wavelength_vacuum.value,
            value_column: _line_value(line.delta_E, line.photon_frequency, line.wavelength_vacuum, unit, k),
        }
        for line in lines
    ]
    limit = series_limit(Z, n_lower, k)
    limit_value = _line_value(limit.energy, limit.frequency, limit.wavelength, unit, k)
    return Report(
        command="spectrum",
        constants=k.provenance,
        columns=["Z", "n_upper", "n_lower", "energy_J", "frequency_Hz", "wavelength_m", value_column],
        rows=rows,
        meta={
            "unit": unit,
            "series_limit": {
                "energy_J": limit.energy.value,
                "frequency_Hz": limit.frequency.value,
                "wavelength_m": limit.wavelength.value,
                value_column: limit_value,
            },
        },
        notes=[f"series limit ({value_column}): {format_number(limit_value, opts.precision)}"],
    )


def cmd_collapse(r0, Z, r_stop, rel_tol, max_steps, trajectory, opts):
    k = get_constants(opts.constants)
    cfg = collapse_config(Z=Z, r0=r0, r_stop=r_stop, max_steps=max_steps, rel_tol=rel_tol, k=k)
    result = simulate_collapse(cfg, k)
    if trajectory:
        write_trajectory_csv(result, trajectory)
    row = {
        "Z": cfg.Z,
        "r0_m": cfg.r0.value,
        "r_stop_m": cfg.r_stop.value,
        "collapse_time_s": result.collapse_time.value,
        "closed_form_time_s": result.closed_form_time.value,
        "residual": result.ode_vs_closed_form_residual,
        "steps": result.steps,
    }
    return Report(
        command="collapse",
        constants=k.provenance,
        columns=list(row),
        rows=[row],
        notes=["collapse in under one second" if result.collapse_time.value < 1.0 else "collapse took over one second"],
    )
