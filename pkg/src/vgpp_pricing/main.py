import argparse
import asyncio
import logging
import sys
from dataclasses import replace

from mediatr import Mediator

from vgpp_pricing.app_module import injector
from vgpp_pricing.application import (
    CalibrateCommand,
    ExoticCommand,
    MultiSimulateCommand,
    PriceCommand,
    SimulateCommand,
    TriangleCommand,
    global_exception_handler,
    initialize_opentelemetry,
)
from vgpp_pricing.domain.calibration import CalibrationMethod, PricerKind
from vgpp_pricing.domain.config import Command, RunConfig, VgppOptions
from vgpp_pricing.domain.errors import ConfigurationError, DomainError, NumericalError
from vgpp_pricing.domain.exotics import SimulationDirection
from vgpp_pricing.domain.reports import ContractKind, PriceMethod, ProcessKind
from vgpp_pricing.infrastructure.services import IArtifactStore

sys.excepthook = global_exception_handler

logger = logging.getLogger("main")

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

_COMMANDS = {
    Command.SIMULATE: SimulateCommand,
    Command.MULTISIM: MultiSimulateCommand,
    Command.PRICE: PriceCommand,
    Command.TRIANGLE: TriangleCommand,
    Command.CALIBRATE: CalibrateCommand,
    Command.EXOTIC: ExoticCommand,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vgpp",
        description="Simulation, pricing and calibration with the VG++ process and its Gamma++ clock.",
        epilog="Exit codes: 0 success, 1 numerical failure, 2 usage or input error. "
        "VGPP_THREADS sets the worker count and never changes results.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration (params, market, command settings)")
    common.add_argument("--seed", type=int, help="root seed, required by every stochastic command")
    common.add_argument("--output", help="report path; CSV companions are written next to it")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    simulate = commands.add_parser("simulate", parents=[common], help="simulate Gamma++ or VG++ paths")
    simulate.add_argument("--process", choices=[p.value for p in ProcessKind])
    simulate.add_argument("--direction", choices=[d.value for d in SimulationDirection])
    simulate.add_argument("--paths", type=_positive_int)
    simulate.add_argument("--steps", type=_positive_int)
    simulate.add_argument("--horizon", type=_positive_float)
    simulate.add_argument("--save-paths", type=int, help="number of trajectories written as CSV")

    multisim = commands.add_parser("multisim", parents=[common], help="simulate the common-factor subordinator")
    multisim.add_argument("--paths", type=_positive_int)
    multisim.add_argument("--steps", type=_positive_int)
    multisim.add_argument("--horizon", type=_positive_float)

    price = commands.add_parser("price", parents=[common], help="price one European option")
    price.add_argument("--method", choices=[m.value for m in PriceMethod])
    price.add_argument("--strike", type=_positive_float)
    price.add_argument("--maturity", type=_positive_float)
    price.add_argument("--put", action="store_true", default=None)
    price.add_argument("--paths", type=_positive_int)

    triangle = commands.add_parser("triangle", parents=[common], help="compare closed, FFT and MC prices on a grid")
    triangle.add_argument("--mc-paths", type=_positive_int)

    calibrate = commands.add_parser("calibrate", parents=[common], help="calibrate to returns or option quotes")
    calibrate.add_argument("--method", choices=[m.value for m in CalibrationMethod], required=True)
    calibrate.add_argument("--returns", help="`date,price` CSV for mle and gmm")
    calibrate.add_argument("--quotes", help="`K,T,mid` CSV for nlls")
    calibrate.add_argument("--pricer", choices=[p.value for p in PricerKind])

    exotic = commands.add_parser("exotic", parents=[common], help="price an American put or a lookback call")
    exotic.add_argument("--contract", choices=[c.value for c in ContractKind])
    exotic.add_argument("--direction", choices=[d.value for d in SimulationDirection])
    exotic.add_argument("--paths", type=_positive_int)
    exotic.add_argument("--steps", type=_positive_int)
    exotic.add_argument("--sweep", type=_positive_float, nargs="+", metavar="F0", help="starting forwards to sweep")

    return parser


def _set(settings, **overrides):
    return replace(settings, **{k: v for k, v in overrides.items() if v is not None})


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """Command-line flags take precedence over the configuration file."""
    command = Command(args.command)
    config = _set(config, command=command, seed=args.seed, output=args.output)

    if command is Command.SIMULATE:
        config.simulate = _set(
            config.simulate,
            process=args.process and ProcessKind(args.process),
            direction=args.direction and SimulationDirection(args.direction),
            paths=args.paths,
            steps=args.steps,
            horizon=args.horizon,
            save_paths=args.save_paths,
        )
    elif command is Command.MULTISIM:
        config.multisim = _set(config.multisim, paths=args.paths, steps=args.steps, horizon=args.horizon)
    elif command is Command.PRICE:
        config.price = _set(
            config.price,
            method=args.method and PriceMethod(args.method),
            K=args.strike,
            T=args.maturity,
            put=args.put,
            paths=args.paths,
        )
    elif command is Command.TRIANGLE:
        config.triangle = _set(config.triangle, mc_paths=args.mc_paths)
    elif command is Command.CALIBRATE:
        config.calibrate = _set(
            config.calibrate,
            method=CalibrationMethod(args.method),
            returns_file=args.returns,
            quotes_file=args.quotes,
            pricer=args.pricer and PricerKind(args.pricer),
        )
    elif command is Command.EXOTIC:
        config.exotic = _set(
            config.exotic,
            contract=args.contract and ContractKind(args.contract),
            direction=args.direction and SimulationDirection(args.direction),
            paths=args.paths,
            steps=args.steps,
            sweep=args.sweep,
        )
    return config


async def main(args: argparse.Namespace):
    """Main entry point for a CLI run."""
    global logger

    try:
        initialize_opentelemetry()
        options = injector.get(VgppOptions)
    except ValueError as e:
        raise ConfigurationError(f"invalid environment configuration: {e}") from e
    logger = logging.getLogger("main")

    artifact_store = injector.get(IArtifactStore)
    config = await artifact_store.load_run_config(args.config) if args.config else RunConfig()
    config = apply_overrides(config, args).validate()

    logger.info(
        f"Running '{config.command.value}' with seed {config.seed} on {options.threads} worker(s)",
        extra={"vgpp_command": config.command.value, "vgpp_seed": config.seed, "vgpp_threads": options.threads},
    )
    mediator = injector.get(Mediator)
    report = await mediator.send_async(_COMMANDS[config.command](config))
    logger.info(f"Report written to {config.output}", extra={"vgpp_file": config.output})
    return report


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run the command and map failures to the exit-code contract."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        asyncio.run(main(args))
    except ConfigurationError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except (DomainError, NumericalError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_NUMERICAL
    except KeyboardInterrupt:
        logger.info("Keyboard interrupt received. Shutting down...")
        return EXIT_NUMERICAL
    return EXIT_OK


def main_entry():
    try:
        sys.exit(run())
    finally:
        logger.info("Application shutdown complete.")


if __name__ == "__main__":
    main_entry()
