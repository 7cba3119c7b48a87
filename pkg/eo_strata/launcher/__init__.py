# this file is needed to load logging.yaml as a package resource
