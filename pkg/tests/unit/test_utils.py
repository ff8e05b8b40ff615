import pytest

from nvdd import utils
from nvdd.constants import constants


def test_load_properties_config_file(tmp_path):
    path = tmp_path / 'nvdd.properties'
    path.write_text('model = II\nVertices = 7\n')
    assert utils.load_properties_config_file(str(path)) == {'model': 'II', 'vertices': '7'}


def test_load_properties_config_file_rejects_bare_keys(tmp_path):
    path = tmp_path / 'nvdd.properties'
    path.write_text('model = II\nverbose\n')
    with pytest.raises(ValueError):
        utils.load_properties_config_file(str(path))


def test_get_config_value():
    config = {'vertices': '7', 'r': '1000'}
    assert utils.get_config_value(config, ['n', 'vertices']) == ('vertices', '7')
    assert utils.get_config_value(config, ['iota']) == (None, None)


def test_get_config_value_conflicting_aliases():
    with pytest.raises(ValueError):
        utils.get_config_value({'n': '5', 'vertices': '7'}, ['n', 'vertices'])


@pytest.mark.parametrize('value, expected', [
    (None, 1),
    ('', 1),
    ('4', 4),
    ('0', 1),
    ('-2', 1),
    ('many', 1),
])
def test_get_threads(monkeypatch, value, expected):
    if value is None:
        monkeypatch.delenv(constants.THREADS_ENV, raising=False)
    else:
        monkeypatch.setenv(constants.THREADS_ENV, value)
    assert utils.get_threads() == expected


def test_trial_streams_are_reproducible():
    a_loc, a_model = utils.trial_streams(7, (1, 5, 0, 3))
    b_loc, b_model = utils.trial_streams(7, (1, 5, 0, 3))
    assert a_loc.uniform() == b_loc.uniform()
    assert a_model.uniform() == b_model.uniform()


def test_trial_streams_are_independent():
    loc, model = utils.trial_streams(7, (1, 5, 0, 3))
    other, _ = utils.trial_streams(7, (1, 5, 0, 4))
    first = loc.uniform(size=4).tolist()
    assert first != model.uniform(size=4).tolist()
    assert first != other.uniform(size=4).tolist()
    assert len(utils.trial_streams(7, (0,), count=3)) == 3
