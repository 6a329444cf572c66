import logging
import sys
from typing import List, Optional

import click

from config import DEFAULT_DEPTH, LOG_LEVEL, MAX_CROSSINGS, MAX_ORBIT
from models.report_models import RunSettings
from routers import braid_router, draw_router, invariant_router, solenoid_router


@click.group()
@click.option("--max-crossings", type=int, default=MAX_CROSSINGS, show_default=True, help="Kauffman state-sum crossing cap.")
@click.option("--max-orbit", type=int, default=MAX_ORBIT, show_default=True, help="Super summit orbit cap.")
@click.option("--depth", type=int, default=DEFAULT_DEPTH, show_default=True, help="Solenoid levels to analyse.")
@click.option("--json", "as_json", is_flag=True, help="Emit reports as JSON.")
@click.pass_context
def cli(ctx, max_crossings, max_orbit, depth, as_json):
    """Braids, closed-braid invariants and tame solenoid embeddings."""
    logging.basicConfig(
        level=LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        ctx.obj = RunSettings(max_crossings=max_crossings, max_orbit=max_orbit, depth=depth, as_json=as_json)
    except ValueError as exc:
        raise click.BadParameter(str(exc))


for router in (braid_router, invariant_router, solenoid_router, draw_router):
    for command in router.commands:
        cli.add_command(command)


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns 0 on success, 1 on domain errors and 2 on parse errors."""
    try:
        code = cli.main(args=argv, prog_name="solenoid", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
