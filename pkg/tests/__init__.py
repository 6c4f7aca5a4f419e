# inextensible test suite
