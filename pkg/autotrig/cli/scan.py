"""
Grid scans of sin_pq(x) / x against the rational bounds, serialized as CSV.

Every float is rendered with `csv_significant_digits` (17) significant digits, which round-trips a double exactly,
so parsing an emitted file and rendering it again reproduces it byte for byte.
"""
import csv
import io
import logging

from autotrig.inequality import bounds
from autotrig.inequality.redheffer import sin_ratio
from autotrig.inequality.report import GridSpec
from autotrig.settings import Accuracy, general_setting
from autotrig.trig.gtrig import Params

logger = logging.getLogger(__name__)

HEADER = ("x", "sin_ratio", "lower", "qpower", "upper", "margin")


class ScanRecord:
    def __init__(
        self,
        x: float,
        sin_ratio: float,
        lower: float,
        qpower: float,
        upper: float,
        margin: float,
    ):
        """
        One row of a scan: the quotient sin_pq(x) / x and the bounds compared against it at the abscissa x.

        Parameters
        ----------
        sin_ratio : float
            sin_pq(x) / x.
        lower : float
            The Redheffer-type lower bound (pi_pq^2 - x^2) / (pi_pq^2 + x^2).
        qpower : float
            The q-power variant (pi_pq^q - |x|^q) / (pi_pq^q + |x|^q).
        upper : float
            The upper bound (6p - x^2) / (6p + x^2), or `None` unless q = 2.
        margin : float
            sin_ratio - lower.
        """
        self.x = x
        self.sin_ratio = sin_ratio
        self.lower = lower
        self.qpower = qpower
        self.upper = upper
        self.margin = margin

    def __eq__(self, other):
        if not isinstance(other, ScanRecord):
            return NotImplemented
        return self.row == other.row

    @property
    def row(self):
        return (self.x, self.sin_ratio, self.lower, self.qpower, self.upper, self.margin)

    def __repr__(self):
        return f"ScanRecord(x={self.x!r}, sin_ratio={self.sin_ratio!r}, margin={self.margin!r})"


def scan_records(params: Params, grid: GridSpec, acc: Accuracy = None):
    """
    Evaluates one `ScanRecord` per grid abscissa, in increasing order of x.
    """
    acc = acc or Accuracy()

    records = []

    for x in grid.abscissae:

        x = float(x)

        ratio = sin_ratio(x=x, params=params, acc=acc)
        lower = bounds.lower_bound(x=x, a=params.pi)

        records.append(
            ScanRecord(
                x=x,
                sin_ratio=ratio,
                lower=lower,
                qpower=bounds.qpower_bound(x=x, params=params),
                upper=bounds.upper_bound_sin_p2(x=x, p=params.p) if params.q == 2.0 else None,
                margin=ratio - lower,
            )
        )

    logger.debug(f"scan {params} on {grid}: {len(records)} records")

    return records


def _format(value, digits):
    if value is None:
        return ""
    return format(value, f".{digits}g")


def _parse(text):
    if text == "":
        return None
    return float(text)


def render_csv(records) -> str:
    digits = int(general_setting("output", "csv_significant_digits"))

    buffer = io.StringIO()

    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)

    for record in records:
        writer.writerow([_format(value, digits) for value in record.row])

    return buffer.getvalue()


def parse_csv(text: str):
    reader = csv.reader(io.StringIO(text))

    header = tuple(next(reader))

    if header != HEADER:
        raise ValueError(f"Unexpected scan header {header}, expected {HEADER}")

    return [ScanRecord(*[_parse(field) for field in row]) for row in reader if row]


def write_csv(records, path: str):
    """
    Writes the records to `path`; the file is opened with newline="" so lines end in "\\n" on every platform.
    """
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(render_csv(records=records))
