"""Utility & helper functions."""

# Link in functions from convnwb
from convnwb.utils.log import print_status
from convnwb.utils.run import catch_error

###################################################################################################
###################################################################################################

def common_prefix(seqs):
    """Longest common prefix of a collection of tuples."""

    seqs = list(seqs)
    if not seqs:
        return ()

    prefix = seqs[0]
    for seq in seqs[1:]:
        ind = 0
        while ind < min(len(prefix), len(seq)) and prefix[ind] == seq[ind]:
            ind += 1
        prefix = prefix[:ind]

    return tuple(prefix)
