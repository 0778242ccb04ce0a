from typing import Callable, List

import click


class Router:
    """Collects click commands so the entry point can include them as a block."""

    def __init__(self) -> None:
        self.commands: List[click.Command] = []

    def command(self, *args, **kwargs) -> Callable[[Callable], click.Command]:
        def decorator(func: Callable) -> click.Command:
            command = click.command(*args, **kwargs)(func)
            self.commands.append(command)
            return command

        return decorator

    def group(self, *args, **kwargs) -> Callable[[Callable], click.Group]:
        def decorator(func: Callable) -> click.Group:
            group = click.group(*args, **kwargs)(func)
            self.commands.append(group)
            return group

        return decorator
