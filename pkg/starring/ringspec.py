"""Ring specifications: a small language naming the rings starring builds.

Grammar (whitespace-insensitive, case-insensitive keywords)::

    spec := atom (('x' | '*') atom)*
    atom := 'Z' int
          | 'M' int '(' spec ')' ['@' ('transpose' | 'id' | 'identity')]

Products nest to the right (``Z2 x Z2 x Z2`` is ``Z2 x (Z2 x Z2)``) and carry
the componentwise involution. Matrix atoms default to the transpose.
"""
from collections import namedtuple
from functools import lru_cache
from .ring import (Involution, MatrixRing, ProductRing, ZmodRing,
                   make_matrix_ring, make_product, make_zmod)


Zmod = namedtuple('Zmod', 'n involution')
Product = namedtuple('Product', 'left right involution')
Matrix = namedtuple('Matrix', 'k base involution')

Zmod.__new__.__defaults__ = (Involution.IDENTITY,)
Product.__new__.__defaults__ = (Involution.COMPONENTWISE,)
Matrix.__new__.__defaults__ = (Involution.TRANSPOSE,)


class RingSpecSyntaxError(ValueError):
    def __init__(self, text=None, position=0, expected=None):
        msg = 'Invalid ring specification {0!r} at position {1}: expected ' \
              '{2}'.format(text, position, expected)
        super(RingSpecSyntaxError, self).__init__(msg)
        self.text = text
        self.position = position


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.position = 0

    def fail(self, expected):
        raise RingSpecSyntaxError(text=self.text, position=self.position,
                                  expected=expected)

    def skip_spaces(self):
        while self.position < len(self.text) and \
                self.text[self.position].isspace():
            self.position += 1

    def peek(self):
        self.skip_spaces()
        return self.text[self.position:self.position + 1].lower()

    def expect(self, char):
        if self.peek() != char:
            self.fail(repr(char))
        self.position += 1

    def integer(self):
        self.skip_spaces()
        start = self.position
        while self.position < len(self.text) and \
                self.text[self.position].isdigit():
            self.position += 1
        if start == self.position:
            self.fail('an integer')
        return int(self.text[start:self.position])

    def word(self):
        self.skip_spaces()
        start = self.position
        while self.position < len(self.text) and \
                self.text[self.position].isalpha():
            self.position += 1
        return self.text[start:self.position].lower()

    def spec(self):
        factors = [self.atom()]
        while self.peek() in ('x', '*', '×'):
            self.position += 1
            factors.append(self.atom())
        node = factors[-1]
        for factor in reversed(factors[:-1]):
            node = Product(factor, node)
        return node

    def atom(self):
        head = self.peek()
        if head == 'z':
            self.position += 1
            n = self.integer()
            if n < 2:
                self.position -= len(str(n))
                self.fail('a modulus of at least 2')
            return Zmod(n)
        if head == 'm':
            self.position += 1
            k = self.integer()
            if k < 1:
                self.position -= len(str(k))
                self.fail('a positive matrix size')
            self.expect('(')
            base = self.spec()
            self.expect(')')
            involution = Involution.TRANSPOSE
            if self.peek() == '@':
                self.position += 1
                start = self.position
                tag = self.word()
                if tag in ('id', 'identity'):
                    involution = Involution.IDENTITY
                elif tag == 'transpose':
                    involution = Involution.TRANSPOSE
                else:
                    self.position = start
                    self.fail("'transpose' or 'id'")
            return Matrix(k, base, involution)
        self.fail("'Z' or 'M'")

    def parse(self):
        node = self.spec()
        self.skip_spaces()
        if self.position != len(self.text):
            self.fail("'x' or the end of the specification")
        return node


@lru_cache()
def parse_ring_spec(text):
    """Parses a ring specification such as ``'M2(Z6)@id'``.

    :raises RingSpecSyntaxError: with the offending ``position``
    """
    return _Parser(text).parse()


def build(spec, max_order=None):
    """Builds the ring described by ``spec`` (a node or a text)."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if isinstance(spec, Zmod):
        return make_zmod(spec.n, max_order=max_order)
    if isinstance(spec, Product):
        return make_product(build(spec.left, max_order),
                            build(spec.right, max_order),
                            max_order=max_order)
    if isinstance(spec, Matrix):
        return make_matrix_ring(build(spec.base, max_order), spec.k,
                                spec.involution, max_order=max_order)
    raise TypeError('Not a ring specification: {0!r}'.format(spec))


def describe(spec):
    """Canonical text of a specification; parsing it gives ``spec`` back."""
    if isinstance(spec, Zmod):
        return 'Z{0}'.format(spec.n)
    if isinstance(spec, Product):
        return '{0} x {1}'.format(describe(spec.left), describe(spec.right))
    return 'M{0}({1})@{2}'.format(spec.k, describe(spec.base),
                                  spec.involution.value)


def order_of(spec):
    """Order of the ring ``spec`` describes, without building it."""
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, Product):
        return order_of(spec.left) * order_of(spec.right)
    return order_of(spec.base) ** (spec.k * spec.k)


def spec_of(ring):
    if isinstance(ring, ZmodRing):
        return Zmod(ring.n)
    if isinstance(ring, ProductRing):
        return Product(spec_of(ring.left), spec_of(ring.right))
    if isinstance(ring, MatrixRing):
        return Matrix(ring.k, spec_of(ring.base), ring.involution)
    raise TypeError('Unknown ring kind {0!r}'.format(ring))
