import csv
import logging
import numbers

from nvdd.constants import constants

logger = logging.getLogger(__name__)


class SweepRecord(object):
    """Mean costs of one (model, n, kappa, r) cell"""

    def __init__(self, model, n, kappa, r, mean_psi, mean_gamma, mean_ratio, upstream_bytes,
                 trials, failures=0):
        self.model = model
        self.n = n
        self.kappa = kappa
        self.r = r
        self.mean_psi = mean_psi
        self.mean_gamma = mean_gamma
        self.mean_ratio = mean_ratio
        self.upstream_bytes = upstream_bytes
        self.trials = trials
        self.failures = failures

    def as_row(self):
        return {field: getattr(self, field) for field in constants.SWEEP_CSV_FIELDS}

    def __repr__(self):
        return ('SweepRecord(model={}, n={}, kappa={}, r={}, mean_psi={:.6g}, '
                'mean_gamma={:.6g}, trials={}, failures={})').format(
                    self.model, self.n, self.kappa, self.r, self.mean_psi, self.mean_gamma,
                    self.trials, self.failures)


class ComparisonRecord(object):
    """An n-VDD cell next to the n-CD cell with the same n and r"""

    def __init__(self, vdd, ncd):
        if vdd.n != ncd.n or vdd.r != ncd.r:
            raise ValueError("Cannot pair {!r} with {!r}".format(vdd, ncd))
        self.vdd = vdd
        self.ncd = ncd

    @property
    def n(self):
        return self.vdd.n

    @property
    def r(self):
        return self.vdd.r

    def __repr__(self):
        return 'ComparisonRecord(vdd={!r}, ncd={!r})'.format(self.vdd, self.ncd)


def _format(value):
    if isinstance(value, bool) or isinstance(value, numbers.Integral):
        return str(value)
    if isinstance(value, numbers.Real):
        return constants.CSV_FLOAT_FORMAT.format(value)
    return str(value)


def _write_rows(rows, fields, out):
    if hasattr(out, 'write'):
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_format(row[field]) for field in fields])
        return
    with open(out, 'w', newline='') as f:
        _write_rows(rows, fields, f)
    logger.info("Wrote %s rows to %s", len(rows), out)


def comparison_rows(records):
    """SweepRecords of comparison results, each n-CD cell written once"""
    rows = []
    pending = None
    for record in records:
        if isinstance(record, ComparisonRecord):
            if pending is not None and pending is not record.ncd:
                rows.append(pending)
            rows.append(record.vdd)
            pending = record.ncd
        else:
            rows.append(record)
    if pending is not None:
        rows.append(pending)
    return rows


def write_records_csv(records, out):
    """Write SweepRecords (or ComparisonRecords) to a path or open file"""
    rows = [record.as_row() for record in comparison_rows(records)]
    _write_rows(rows, constants.SWEEP_CSV_FIELDS, out)


def write_attack_csv(stats, out):
    rows = [s.as_row() for s in stats]
    _write_rows(rows, constants.ATTACK_CSV_FIELDS, out)
