"""Canonical ordering of vertex labels.

Labels are opaque strings. Purely numeric labels sort numerically so that
"10" follows "9"; everything else sorts after them lexicographically.
"""


def vertex_key(label):
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def sorted_labels(labels):
    return sorted(labels, key=vertex_key)


def set_key(labels):
    """Sort key for a collection of labels: size first, then elementwise."""
    ordered = sorted_labels(labels)
    return (len(ordered), [vertex_key(x) for x in ordered])
