import os

__all__ = ["expand_path", "make_output_dir", "output_file"]

def expand_path(input_path):
    """Replace ~/ and environmental variables in path.

    Parameters
    ----------
    input_path : str
        The path to possible replace special portions.

    Returns
    -------
    str
        The path with special portions expanded.
    """
    return os.path.expanduser(os.path.expandvars(input_path))

def make_output_dir(out_dir):
    """Create the output directory if it does not exist.

    Parameters
    ----------
    out_dir : str
        The directory to create.

    Returns
    -------
    str
        The expanded directory path.
    """
    out_dir = expand_path(out_dir)
    if not os.path.exists(out_dir):
        os.makedirs(out_dir)
    return out_dir

def output_file(out_dir, stem, suffix):
    """Build an output file path from a stem and suffix.

    Parameters
    ----------
    out_dir : str
        The output directory.
    stem : str
        The leading part of the file name.
    suffix : str
        The trailing part of the file name, including the extension.

    Returns
    -------
    str
    """
    return os.path.join(out_dir, "{}{}".format(stem, suffix))
