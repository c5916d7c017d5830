"""
pcmk - Weighted Minkowski problems for pseudo-cones. For more info visit https://github.com/pcmk-dev/pcmk
Copyright (C) 2026-present pcmk developers (MIT)

Visit https://github.com/pcmk-dev/pcmk

MIT License

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import argparse
import inspect

from ..system.info import version


class CommandHandler:
    def __init__(self, prog="pcmk", description=None):
        """
        Registry of subcommands built from function signatures.

        Parameters:
            prog (str): program name shown in usage lines.
            description (str): text shown above the command list.
        """
        self.prog = prog
        self.description = description
        self.handlers = {}
        self.categories = {}

    def command(self, category=None, name=None, aliases=None, choices=None):
        """
        Decorator to register a function as a subcommand.

        Parameters without a default become positional arguments, bool parameters become
        flags, the others options typed by their annotation. Underscores turn into dashes.

        Parameters:
            category (str): group shown in the help listing (default: None).
            name (str): subcommand name (default: the function name with dashes).
            aliases (list): alternative names (default: None).
            choices (dict): allowed values per parameter name (default: None).

        Returns:
            function: The function, unchanged.
        """
        def decorator(func):
            nonlocal name, category
            if name is None:
                name = func.__name__.replace("_", "-")
            if category is None:
                category = "Commands"
            command_args = []
            for param in inspect.signature(func).parameters.values():
                if param.default is inspect.Parameter.empty:
                    command_args.append(param.name)
                elif param.annotation is bool:
                    command_args.append(f"--{param.name.replace('_', '-')}")
                else:
                    command_args.append((param.name.replace("_", "-"), param.default))
            self.categories.setdefault(category, {})[name] = {
                "description": func.__doc__.strip() if func.__doc__ else "",
                "args": command_args,
                "aliases": list(aliases or []),
                "choices": dict(choices or {}),
            }
            self.handlers[name] = func
            for alias in aliases or []:
                self.handlers[alias] = func
            return func

        return decorator

    def get_command_info(self, command_name):
        for category, commands in self.categories.items():
            for name, info in commands.items():
                if command_name == name or command_name in info["aliases"]:
                    return dict(info, name=name, category=category)
        return None

    def get_help_message(self):
        """Command listing grouped by category."""
        help_message = ""
        for category, commands in self.categories.items():
            help_message += f"{category}:\n"
            for command_name, command_info in commands.items():
                summary = command_info["description"].splitlines()[0] if command_info["description"] else ""
                help_message += f"  {command_name}"
                if summary:
                    help_message += f" - {summary}"
                help_message += "\n"
        return help_message

    def build_parser(self):
        parser = argparse.ArgumentParser(prog=self.prog, description=self.description,
                                         epilog=self.get_help_message(),
                                         formatter_class=argparse.RawDescriptionHelpFormatter)
        parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
        parser.add_argument("--verbose", action="store_true", help="log progress to standard error")
        sub = parser.add_subparsers(dest="command", metavar="<command>")
        for commands in self.categories.values():
            for command_name, info in commands.items():
                func = self.handlers[command_name]
                cmd = sub.add_parser(command_name, aliases=info["aliases"],
                                     help=info["description"].splitlines()[0] if info["description"] else None,
                                     description=info["description"])
                for param in inspect.signature(func).parameters.values():
                    allowed = info["choices"].get(param.name)
                    if param.default is inspect.Parameter.empty:
                        cmd.add_argument(param.name, choices=allowed)
                    elif param.annotation is bool:
                        cmd.add_argument(f"--{param.name.replace('_', '-')}", dest=param.name,
                                         action="store_true")
                    else:
                        kind = param.annotation if param.annotation in (int, float, str) else str
                        cmd.add_argument(f"--{param.name.replace('_', '-')}", dest=param.name,
                                         type=kind, default=param.default, choices=allowed)
        return parser

    def parse(self, argv=None):
        return self.build_parser().parse_args(argv)

    def dispatch(self, args):
        """Run the subcommand selected in parsed args; None when no subcommand was given."""
        if args.command is None:
            self.build_parser().print_help()
            return None
        func = self.handlers[args.command]
        params = inspect.signature(func).parameters
        return func(**{name: getattr(args, name) for name in params})
