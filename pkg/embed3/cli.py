#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This file defines the functions to run embed3 from the command line.

We aim to import most packages locally in the functions that require them, in order to
reduce the startup time of individual CLI commands.

Exit codes: 0 certified, 1 not embeddable, 2 hypothesis failed, 3 inconclusive,
10 input error, 11 scale exceeded, 12 I/O error, 13 internal error.

"""
# system imports
import os
import sys
import shutil
import functools
import logging

# external packages
import click

# local imports
from embed3.config import Embed3Config, list_configs
from embed3.constants import ExitCode


def catch_embed3_errors(func):
    """
    Decorator that catches all Embed3Errors and prints them as a useful message to the
    user instead of printing the full stacktrace to the console. The process exits with
    the exit code of the error. Commands called with ``--format structured`` print the
    error as a structured report on stdout instead.
    """

    from embed3.errors import Embed3Error, os_to_embed3_error

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        structured = kwargs.get('fmt') == 'structured'
        try:
            return func(*args, **kwargs)
        except OSError as exc:
            err = os_to_embed3_error(exc)
            if isinstance(err, Embed3Error):
                _fail(err, err.title, err.message, structured)
            _fail(exc, 'Cannot access file', str(exc), structured, ExitCode.IOError)
        except Embed3Error as exc:
            _fail(exc, exc.title, exc.message, structured)
        except Exception as exc:
            if not structured:
                import traceback
                traceback.print_exc()
            _fail(exc, 'An unexpected error occurred',
                  f'{exc!r}. Please report this as a bug.', structured)

    return wrapper


def _fail(exc, title, message, structured, exit_code=None):
    exit_code = exit_code or getattr(exc, 'exit_code', ExitCode.InternalError)
    if structured:
        from embed3.report import error_report
        click.echo(error_report(exc, exit_code), nl=False)
    else:
        _echo_error(title, message)
    sys.exit(exit_code)


def _echo_error(title, message):
    import textwrap
    width, height = shutil.get_terminal_size()
    wrapped_msg = textwrap.fill(message, width=width)

    click.echo('', err=True)
    click.secho(title, fg='red', err=True)
    click.secho(wrapped_msg, fg='red', err=True)
    click.echo('', err=True)


def _parse_field(name):
    from embed3.algebra import Field
    from embed3.errors import InputError

    if name is None:
        return None
    try:
        return Field.parse(name).name
    except ValueError as exc:
        raise InputError('Unknown field', f'{exc}. Use gf2, gf3, gf5, gf(p) or '
                                          f'rational.') from exc


# ========================================================================================
# Command groups
# ========================================================================================

class SpecialHelpOrder(click.Group):

    def __init__(self, *args, **kwargs):
        self.help_priorities = {}
        super(SpecialHelpOrder, self).__init__(*args, **kwargs)

    def get_help(self, ctx):
        self.list_commands = self.list_commands_for_help
        return super(SpecialHelpOrder, self).get_help(ctx)

    def list_commands_for_help(self, ctx):
        """reorder the list of commands when listing the help"""
        commands = super(SpecialHelpOrder, self).list_commands(ctx)
        return (c[1] for c in sorted(
            (self.help_priorities.get(command, 1), command)
            for command in commands))

    def command(self, *args, **kwargs):
        """Behaves the same as `click.Group.command()` except capture
        a priority for listing command names in help.
        """
        help_priority = kwargs.pop('help_priority', 1)
        help_priorities = self.help_priorities

        def decorator(f):
            cmd = super(SpecialHelpOrder, self).command(*args, **kwargs)(f)
            help_priorities[cmd.name] = help_priority
            return cmd

        return decorator

    def group(self, *args, **kwargs):
        """Behaves the same as `click.Group.group()` except capture
        a priority for listing command names in help.
        """
        help_priority = kwargs.pop('help_priority', 1)
        help_priorities = self.help_priorities

        def decorator(f):
            cmd = super(SpecialHelpOrder, self).group(*args, **kwargs)(f)
            help_priorities[cmd.name] = help_priority
            return cmd

        return decorator


def _check_config(ctx, param, value):
    """
    Checks if the selected config name, passed as :param:`value`, is valid.

    :param ctx: Click context to be passed to command.
    :param param: Name of click parameter, in our case 'config_name'.
    :param value: Value  of click parameter, in our case the selected config.
    """

    if value not in list_configs() and not value == 'embed3':
        ctx.fail(f'Configuration \'{value}\' does not exist. You can list\n'
                 'all existing configurations with \'embed3 configs\'.')

    return value


existing_config_option = click.option(
    '-c', '--config-name',
    default='embed3',
    is_eager=True,
    expose_value=True,
    metavar='NAME',
    callback=_check_config,
    help='Select an existing configuration for the command.'
)

config_option = click.option(
    '-c', '--config-name',
    default='embed3',
    is_eager=True,
    expose_value=True,
    metavar='NAME',
    help='Run with the given configuration name.'
)

field_option = click.option(
    '--field', '-k',
    default=None,
    metavar='F',
    help='Field of the dual matroid: gf2, gf3, gf5, gf(p) or rational. Defaults to '
         'the configured field.'
)


@click.group(cls=SpecialHelpOrder)
def main():
    """Embeddability certificates for 2-complexes in 3-space."""


@main.group(cls=SpecialHelpOrder, help_priority=7)
def log():
    """View and manage the log."""


# ========================================================================================
# Main commands
# ========================================================================================

@main.command(help_priority=0)
@config_option
@click.argument('file')
@field_option
@click.option('--certificate', 'certificate_out', default=None, metavar='OUT',
              help='Write the certificate to OUT if the complex is certified.')
@click.option('--format', 'fmt', type=click.Choice(['text', 'structured']),
              default=None, help='Report format. Defaults to the configured format.')
@click.option('--cross-field', is_flag=True, default=False,
              help='Also run over gf2, gf3, gf5 and rational and compare the dual '
                   'matroids.')
@click.option('--verbose', '-v', is_flag=True, default=False,
              help='Print log messages to stderr.')
@catch_embed3_errors
def check(file: str, field: str, certificate_out: str, fmt: str, cross_field: bool,
          verbose: bool, config_name: str):
    """Decides whether the complex in FILE embeds in 3-space."""
    from embed3.main import Embed3
    from embed3.report import report
    from embed3.utils.serializer import write_json

    e3 = Embed3(config_name, log_to_stderr=verbose)
    fmt = fmt or e3.get_conf('main', 'format')

    verdict, cross = e3.check(file, _parse_field(field), cross_field)
    text, code = report(verdict, fmt, cross)
    click.echo(text, nl=False)

    if certificate_out:
        if verdict.certificate:
            write_json(certificate_out, verdict.certificate.to_dict())
            click.echo(f'Certificate written to {certificate_out}.', err=True)
        else:
            click.echo('No certificate to write.', err=True)

    if cross is not None and not cross.isomorphic:
        code = ExitCode.InternalError

    sys.exit(code)


@main.command(help_priority=1)
@click.argument('name')
@click.option('--out', '-o', default=None, metavar='FILE',
              help='Write the complex to FILE instead of stdout.')
@catch_embed3_errors
def corpus(name: str, out: str):
    """Prints a named example complex.

    NAME is one of triangle, tetrahedron, octahedron, icosahedron,
    suspension-of-cycle(n), suspension(n), cone(Kn), cone(Cn), cone(Pn), cone(Km,n),
    book(n), torus7, parallel-triangles(n), two-tetrahedra-glued or bowtie.
    """
    from embed3.corpus import corpus as build
    from embed3.utils.serializer import dumps, write_json

    c = build(name)
    if out:
        write_json(out, c.to_dict())
        click.echo(f'Written to {out}.', err=True)
    else:
        click.echo(dumps(c.to_dict()), nl=False)


@main.command(help_priority=2)
@click.argument('source')
@field_option
@click.option('--realize', is_flag=True, default=False,
              help='Search for a graph realizing the matroid.')
@catch_embed3_errors
def matroid(source: str, field: str, realize: bool):
    """Describes the dual matroid of a complex file or the column matroid of a
    labelled matrix file."""
    from embed3.algebra import Field
    from embed3.complex import validate
    from embed3.matroid import dual_matroid, matrix_from_dict, components, graph_realization
    from embed3.utils.serializer import read_json

    raw = read_json(source)
    field = _parse_field(field)

    if isinstance(raw, dict) and 'faces' in raw:
        m = dual_matroid(validate(raw), Field.parse(field or 'gf2'))
    else:
        if field and isinstance(raw, dict):
            raw = dict(raw, field=field)
        m = matrix_from_dict(raw)

    click.echo(f'Field:       {m.field.name}')
    click.echo(f'Elements:    {len(m.ground)}')
    click.echo(f'Rank:        {m.rank}')
    click.echo(f'Loops:       {", ".join(str(e) for e in m.loops()) or "none"}')
    comps = components(m)
    click.echo(f'Components:  {len(comps)}')

    if realize:
        realization = graph_realization(m)
        if realization is None:
            click.echo('Not graphic.')
            sys.exit(ExitCode.NotEmbeddable)
        g = realization.graph
        click.echo(f'Graphic, realized by {g.number_of_vertices()} vertices:')
        for e, u, v in g.triples():
            click.echo(f'  {e}: {u} -- {v}')


@main.command(help_priority=3)
@config_option
@click.argument('file')
@field_option
@catch_embed3_errors
def maclane(file: str, field: str, config_name: str):
    """Searches for a sparse generating set of the cycle space of FILE."""
    from embed3.main import Embed3

    e3 = Embed3(config_name)
    result = e3.maclane(file, _parse_field(field))

    if not result.graphic:
        click.echo('No sparse generating set: the dual matroid is not graphic.')
        sys.exit(ExitCode.NotEmbeddable)
    if not result.exact:
        click.echo('The dual matroid is graphic, but no edge directions make the vertex '
                   'stars span the cycle space exactly.')
        sys.exit(ExitCode.Inconclusive)

    click.echo(f'Sparse generating set with {len(result.family)} vectors over '
               f'{result.family.field.name}:')
    labels = ', '.join(str(x) for x in result.family.labels)
    click.echo(f'  coordinates: {labels}')
    for name, vector in result.family.to_list():
        click.echo(f'  {name}: {vector}')


@main.command(help_priority=4)
@config_option
@click.argument('certificate')
@click.option('--format', 'fmt', type=click.Choice(['text', 'structured']),
              default='text', help='Report format.')
@catch_embed3_errors
def verify(certificate: str, fmt: str, config_name: str):
    """Independently re-checks a certificate file."""
    from embed3.main import Embed3
    from embed3.report import verification_report

    e3 = Embed3(config_name)
    cert, result = e3.verify(certificate)
    click.echo(verification_report(result, fmt), nl=False)
    sys.exit(ExitCode.Certified if result.valid else ExitCode.InputError)


@main.command(help_priority=5)
def configs():
    """Lists all configurations."""
    for name in list_configs():
        click.echo(name)


@main.command(help_priority=8)
def about():
    """Returns the version number and other information."""
    import time
    from embed3 import __author__
    from embed3 import __version__

    year = time.localtime().tm_year
    click.echo('')
    click.echo(f'Version:    {__version__}')
    click.echo(f'Copyright:  (c) {year}, {__author__}.')
    click.echo('')


# ========================================================================================
# Log commands
# ========================================================================================

@log.command(name='show', help_priority=0)
@existing_config_option
def log_show(config_name: str):
    """Prints the log to the console."""
    from embed3.utils.appdirs import get_log_path

    log_file = get_log_path('embed3', config_name + '.log')

    if os.path.isfile(log_file):
        try:
            with open(log_file, 'r') as f:
                text = f.read()
            click.echo_via_pager(text)
        except OSError:
            raise click.ClickException(f'Could not open log file at \'{log_file}\'')
    else:
        click.echo_via_pager('')


@log.command(name='clear', help_priority=1)
@existing_config_option
def log_clear(config_name: str):
    """Clears the log file."""
    from embed3.utils.appdirs import get_log_path

    log_dir = get_log_path('embed3')
    log_name = config_name + '.log'

    log_files = []

    for file_name in os.listdir(log_dir):
        if file_name.startswith(log_name):
            log_files.append(os.path.join(log_dir, file_name))

    try:
        for file in log_files:
            open(file, 'w').close()
        click.echo('Cleared the log.')
    except FileNotFoundError:
        click.echo('Cleared the log.')
    except OSError:
        raise click.ClickException(f'Could not clear log at \'{log_dir}\'. '
                                   f'Please try to delete it manually')


@log.command(name='level', help_priority=2)
@click.argument('level_name', required=False,
                type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']))
@existing_config_option
def log_level(config_name: str, level_name: str):
    """Gets or sets the log level."""
    conf = Embed3Config(config_name)
    if level_name:
        conf.set('app', 'log_level', logging._nameToLevel[level_name])
        click.echo(f'Log level set to {level_name}.')
    else:
        level_name = logging.getLevelName(conf.get('app', 'log_level'))
        click.echo(f'Log level: {level_name}')
