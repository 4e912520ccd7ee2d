"""Help command for the thaqkd CLI."""


def cmd_help() -> int:
    """Handle the help subcommand.

    Returns:
        Exit code (0 for success)
    """
    print("thaqkd - Trojan-horse side-channel analysis for BB84")
    print()
    print("Usage: thaqkd <command> [--config FILE] [--key value]...")
    print()
    print("Available commands:")
    print("  help               Show this help message")
    print()
    print("Single evaluations:")
    print("  fidelity           Closed-form, tabulated and circuit fidelities of one attack")
    print("  keyrate            Secret key rate at one distance and noise level")
    print("  shutter            Reflection count and key rate for one travel time")
    print()
    print("Sweeps:")
    print("  optimize-thermal   Best thermal noise per distance and the secure ranges")
    print("  separable          Separable-attack bounds, closed form against constructed pair")
    print("  fig3               Baseline and optimized key rate against distance per memory")
    print("  fig4               Distinguishability bounds against returned photons")
    print("  fig5               Reflection staircase and convolved key rate against travel time")
    print()
    print("Checks:")
    print("  selfcheck          Run every property suite, exit 3 if one fails")
    print("  calibrate-shutter  Search the photon budget that meets the shutter targets")
    print()
    print("Configuration (later wins):")
    print("  [run] table in ~/.config/thaqkd.toml, then ./thaqkd.toml")
    print("  key=value lines in the file given with --config")
    print("  --key value or --key=value flags")
    print()
    print("Exit codes: 0 success, 1 usage error, 2 invalid input, 3 numerical failure")
    print()
    print("Examples:")
    print("  thaqkd fig4 --mu_points 100")
    print("  thaqkd fig3 --tau_us 2,5,10 --L_max_km 1.0 --output fig3.csv")
    print("  thaqkd keyrate --L_km 0.2 --mu_T 100")
    print("  thaqkd selfcheck --rng_seed 7")
    return 0
