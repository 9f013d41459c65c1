"""Published reference values for the ten benchmark tables.

Each table sweeps either the component count n or the dependence parameter
theta for homogeneous Weibull components under a Gumbel-Hougaard copula, and
reports (optimum, cost rate) for three deviation-cost scenarios:
(c_d1, c_d2) in {(0,0), (2,1), (10,5)}.  Values are transcribed from the
published study this package reproduces; they serve as regression targets for
the ``--compare`` flag and the acceptance suite.

Defects in the source values are kept as-is and flagged:

* table 7, n=7, scenario (2,1): the published cost is unreadable ("54.2.96");
  stored as None.
* table 3, scenario (2,1): the whole published cost column is internally
  inconsistent -- its theta=2 cell (37.5302) conflicts with table 1, which
  reports 37.5102 for the identical configuration, and every cell sits
  0.015-0.025 above recomputation while the optima themselves and the
  matching periodic column (table 9) agree with recomputation.  An
  independent quadrature cross-check of the theta=1 cell reproduces the
  recomputed 49.1914, not the published 49.2067.  The column's cost cells
  are marked suspect; the T* cells are kept.
* table 2, n=5, scenario (0,0): published T*=1.7462 looks like a digit
  transposition of 1.7426 -- the first-order residual at 1.7462 is clearly
  positive (+0.003) and the published cost 18.3084 matches the cost at
  1.7426 to all four printed decimals.  The optimum cell is marked suspect;
  the cost cell is kept.
"""

from __future__ import annotations

from dataclasses import dataclass

DEVIATION_SCENARIOS = ((0.0, 0.0), (2.0, 1.0), (10.0, 5.0))


@dataclass(frozen=True)
class TableSpec:
    """Configuration generator + published values for one benchmark table."""

    table_id: int
    topology: str            # "series" | "parallel"
    policy: str              # "age" | "periodic"
    rate: float              # Weibull lambda
    shape: float             # Weibull alpha
    sweep: str               # "n" | "theta"
    theta: float | None      # fixed theta when sweeping n
    n: int | None            # fixed n when sweeping theta
    tau: float | None        # periodic only
    c_f: float
    c_p_each: float
    # rows: sweep value -> ((opt, cost), (opt, cost), (opt, cost)) per scenario
    rows: dict
    # published COST cells known to be wrong: (sweep_value, scenario_index)
    suspect_cells: tuple = ()
    # published OPTIMUM cells known to be wrong: (sweep_value, scenario_index)
    suspect_optima: tuple = ()

    @property
    def sweep_values(self):
        return tuple(self.rows.keys())


TABLES: dict[int, TableSpec] = {}


def _add(spec: TableSpec):
    TABLES[spec.table_id] = spec


_add(TableSpec(
    1, "series", "age", 0.4, 2.5, "n", theta=2.0, n=None, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        2: ((0.7717, 21.8277), (0.8258, 23.3477), (0.9927, 28.3556)),
        3: ((0.8584, 29.6197), (0.8946, 30.7961), (1.0127, 34.9426)),
        4: ((0.9341, 36.5439), (0.9610, 37.5102), (1.0491, 41.0551)),
        5: ((1.0055, 42.7784), (1.0255, 43.6025), (1.0926, 46.7187)),
        6: ((1.0760, 48.4142), (1.0909, 49.1411), (1.1406, 51.9545)),
        7: ((1.1479, 53.5065), (1.1582, 54.1600), (1.1921, 56.7798)),
        8: ((1.2234, 58.0923), (1.2289, 58.7180), (1.2469, 61.2096)),
    }))

_add(TableSpec(
    2, "parallel", "age", 0.4, 2.5, "n", theta=2.0, n=None, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        2: ((1.0669, 13.3336), (1.1391, 14.6433), (1.3497, 18.9166)),
        3: ((1.3475, 14.9232), (1.4038, 15.8975), (1.5773, 19.2541)),
        4: ((1.5635, 16.6280), (1.6099, 17.4165), (1.7581, 20.2180)),
        5: ((1.7462, 18.3084), (1.7823, 18.9743), (1.9118, 21.3905)),
        6: ((1.8990, 19.9276), (1.9338, 20.5045), (2.0485, 22.6307)),
        7: ((2.0413, 21.4730), (2.0721, 21.9808), (2.1744, 23.8775)),
        8: ((2.1751, 22.9379), (2.2025, 23.3900), (2.2935, 25.0990)),
    },
    suspect_optima=((5, 0),)))  # 1.7462 is a transposition of 1.7426

_add(TableSpec(
    3, "series", "age", 0.4, 2.5, "theta", theta=None, n=4, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((0.7080, 48.2220), (0.7233, 49.2067), (0.7767, 52.8148)),
        2.0: ((0.9341, 36.5439), (0.9606, 37.5302), (1.0491, 41.0551)),
        4.0: ((1.0730, 31.8144), (1.1078, 32.7993), (1.2210, 36.2773)),
        5.0: ((1.1032, 30.9445), (1.1398, 31.9294), (1.2588, 35.3975)),
        6.5: ((1.1318, 30.1627), (1.1703, 31.1474), (1.2948, 34.6064)),
        8.5: ((1.1548, 29.5633), (1.1948, 30.5480), (1.3238, 33.9996)),
        15.0: ((1.1879, 28.7401), (1.2302, 29.7239), (1.3657, 33.1652)),
    },
    # the whole (2,1)-scenario cost column disagrees with tables 1 and 9 and
    # with independent recomputation; see the module docstring
    suspect_cells=tuple((th, 1) for th in (1.0, 2.0, 4.0, 5.0, 6.5, 8.5, 15.0))))

_add(TableSpec(
    4, "series", "age", 0.6, 1.5, "theta", theta=None, n=4, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((0.4468, 149.1136), (0.4504, 150.2213), (0.4624, 154.62536)),
        2.0: ((0.7092, 93.9354), (0.7181, 95.0426), (0.7448, 99.43159)),
        4.0: ((0.8935, 74.5556), (0.9074, 75.6631), (0.9464, 80.04338)),
        5.0: ((0.9358, 71.1895), (0.9510, 72.2961), (0.9929, 76.67455)),
        6.5: ((0.9766, 68.2170), (0.9931, 69.3232), (1.0380, 73.69994)),
        8.5: ((1.0098, 65.9724), (1.0274, 67.0787), (1.0747, 71.45403)),
        15.0: ((1.0585, 62.9356), (1.0777, 64.0423), (1.1287, 68.41568)),
    }))

_add(TableSpec(
    5, "parallel", "age", 0.4, 2.5, "theta", theta=None, n=4, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((2.0119, 11.4888), (2.0552, 12.0935), (2.1908, 14.2623)),
        2.0: ((1.5635, 16.6280), (1.6100, 17.4162), (1.7581, 20.2180)),
        4.0: ((1.3724, 21.0679), (1.4192, 21.9527), (1.5691, 25.0994)),
        5.0: ((1.3393, 22.1888), (1.3860, 23.0911), (1.5356, 26.3042)),
        6.5: ((1.3108, 23.3071), (1.3573, 24.2246), (1.5063, 27.4971)),
        8.5: ((1.2899, 24.2444), (1.3363, 25.1730), (1.4846, 28.4906)),
        15.0: ((1.2629, 25.6607), (1.3090, 26.6036), (1.4560, 29.9823)),
    }))

_add(TableSpec(
    6, "parallel", "age", 0.6, 1.5, "theta", theta=None, n=4, tau=None,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((1.3665, 19.3197), (1.4112, 20.2704), (1.5592, 23.6470)),
        2.0: ((1.0499, 32.2710), (1.0918, 33.3869), (1.2308, 37.3880)),
        4.0: ((0.9970, 43.5528), (1.0360, 44.6751), (1.1588, 48.8264)),
        5.0: ((1.0029, 46.3282), (1.0406, 47.4435), (1.1567, 51.6144)),
        6.5: ((1.0154, 49.0507), (1.0513, 50.1587), (1.1593, 54.3510)),
        8.5: ((1.0308, 51.2922), (1.0648, 52.3949), (1.1646, 56.6096)),
        15.0: ((1.0625, 54.6011), (1.0927, 55.6995), (1.1773, 59.9615)),
    }))

_add(TableSpec(
    7, "series", "periodic", 0.4, 2.5, "n", theta=2.0, n=None, tau=0.1,
    c_f=100.0, c_p_each=5.0,
    rows={
        2: ((8, 21.8480), (8, 23.3650), (10, 28.3569)),
        3: ((9, 29.6656), (9, 30.7969), (10, 34.9470)),
        4: ((9, 36.5792), (10, 37.5515), (11, 41.1240)),
        5: ((10, 42.7800), (10, 43.6205), (11, 46.7202)),
        6: ((11, 48.4287), (11, 49.1433), (11, 52.0014)),
        7: ((11, 53.5632), (12, None), (12, 56.7814)),  # unreadable cost cell
        8: ((12, 58.1040), (12, 58.7364), (12, 61.2661)),
    },
    suspect_cells=((7, 1),)))

_add(TableSpec(
    8, "parallel", "periodic", 0.4, 2.5, "n", theta=2.0, n=None, tau=0.1,
    c_f=100.0, c_p_each=5.0,
    rows={
        2: ((11, 13.3477), (11, 14.6642), (14, 18.9508)),
        3: ((13, 14.9489), (14, 15.8976), (16, 19.2604)),
        4: ((16, 16.6414), (16, 17.4175), (18, 20.2377)),
        5: ((17, 18.3259), (18, 18.9774), (19, 21.3920)),
        6: ((19, 19.9276), (19, 20.5151), (20, 22.6548)),
        7: ((20, 21.4876), (21, 21.9875), (22, 23.8837)),
        8: ((22, 22.9428), (22, 23.3900), (23, 25.0994)),
    }))

_add(TableSpec(
    9, "series", "periodic", 0.4, 2.5, "theta", theta=None, n=4, tau=0.1,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((7, 48.2262), (7, 49.2271), (8, 52.8484)),
        2.0: ((9, 36.5792), (10, 37.5515), (11, 41.1240)),
        4.0: ((11, 31.8277), (11, 32.7777), (12, 36.2856)),
        5.0: ((11, 30.9449), (11, 31.9337), (13, 35.4254)),
        6.5: ((11, 30.1791), (12, 31.1369), (13, 34.6068)),
        8.5: ((12, 29.5924), (12, 30.5241), (13, 34.0082)),
        15.0: ((12, 28.7413), (12, 29.7116), (14, 33.1809)),
    }))

_add(TableSpec(
    10, "parallel", "periodic", 0.4, 2.5, "theta", theta=None, n=4, tau=0.1,
    c_f=100.0, c_p_each=5.0,
    rows={
        1.0: ((20, 11.4899), (21, 12.1106), (22, 14.2632)),
        2.0: ((16, 16.6414), (16, 17.4175), (18, 20.2377)),
        4.0: ((14, 21.0764), (14, 21.9570), (16, 25.1107)),
        5.0: ((13, 22.2073), (14, 23.0934), (15, 26.3199)),
        6.5: ((13, 23.3085), (14, 24.2455), (15, 27.4976)),
        8.5: ((13, 24.2456), (13, 25.1891), (15, 28.4935)),
        15.0: ((13, 25.6768), (13, 26.6046), (15, 30.0053)),
    }))
