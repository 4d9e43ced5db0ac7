import pytest

from groupeq.groups import cyclic_group, klein_group, symmetric_group_3


def make_corpus():
    """The standard desk-scale test groups, generating sets symmetric by
    construction."""
    return [
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_group(),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group_3("pair"),
    ]


@pytest.fixture(scope="session")
def corpus():
    return make_corpus()


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group_3("pair")


@pytest.fixture()
def group_file(tmp_path):
    """Write a group to a temp file and return the path."""

    def write(group):
        from groupeq.groups import format_group_file

        path = tmp_path / f"{group.name}.grp"
        path.write_text(format_group_file(group))
        return str(path)

    return write
