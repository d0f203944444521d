# Release metadata. Bumped by hand at tag time.

version_json = {
    "version": "0.1.0",
}


def get_versions():
    return dict(version_json)
