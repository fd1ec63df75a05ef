"""Smoke test for the injcolor extension module."""

import injcolor


def main():
    c5 = injcolor.Graph.cycle(5)
    assert c5.n == 5 and len(c5.edges()) == 5

    value, colors = injcolor.chromatic("injective", c5)
    assert value == 3, value
    assert injcolor.verify("injective", c5, colors) is None
    assert injcolor.verify("proper", injcolor.Graph.path(3), [1, 1, 2]) is not None

    n = injcolor.transform("two-step", c5)
    assert injcolor.chromatic("proper", n)[0] == value

    g = injcolor.product("direct", injcolor.Graph.cycle(3), injcolor.Graph.cycle(4))
    assert g.n == 12

    closed, _ = injcolor.chi_i_direct_cycles(3, 4)
    graph, witness = injcolor.direct_cycle_coloring(3, 4)
    assert injcolor.chromatic("injective", graph)[0] == closed == max(witness)

    size, _ = injcolor.max_packing("open", c5)
    parts = injcolor.min_partition("open", c5)
    assert len(parts) == value and size >= 1

    assert injcolor.sylvester(3, 5, 8) == (True, (1, 1))
    assert injcolor.sylvester(3, 5, 7)[0] is False
    assert len(injcolor.pattern("A")) > 0

    try:
        injcolor.Graph(2, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("self-loop accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
