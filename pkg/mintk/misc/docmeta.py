import abc


class DocstringMeta(abc.ABCMeta):
    '''
    Metaclass for abstract bases whose concrete subclasses override methods without repeating the docstring.

    An undocumented member of a subclass takes the docstring of the same member in the nearest base that has one.
    '''

    def __new__(mcls, classname, bases, cls_dict):
        cls = abc.ABCMeta.__new__(mcls, classname, bases, cls_dict)
        for name, member in cls_dict.items():
            if name.startswith('__') or getattr(member, '__doc__', None):
                continue
            for base in cls.__mro__[1:]:
                doc = getattr(getattr(base, name, None), '__doc__', None)
                if doc:
                    try:
                        member.__doc__ = doc
                    except AttributeError:
                        # staticmethod and slot wrappers on old interpreters
                        pass
                    break
        return cls
