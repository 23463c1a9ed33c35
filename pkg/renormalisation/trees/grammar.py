"""
Text and LaTeX forms of trees, forests and their linear combinations.

Grammar::

    forest  := product ('.' product)* | '1_1'
    product := factor ('*' factor)*
    factor  := '1' | 'X' ['^' index] | ('I' | 'J') '[' name ',' index ']' '(' product ')' | '(' product ')'
    index   := integer | '[' integer (',' integer)* ']'

`J` marks the planted symbols of the positive part. Printing returns the canonical form, and
parsing a printed tree gives the same tree back.
"""
import re

from renormalisation.trees.decorations import MultiIndex
from renormalisation.trees.linear import format_coefficient
from renormalisation.trees.tree import DecoratedTree, Edge, Forest, product, validate
from renormalisation.utils.exceptions import ParseError

TOKEN_RE = re.compile(r'\s*(?:(1_1)|(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))')

EMPTY_FOREST = '1_1'


def _tokenize(text):
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        empty, number, name, symbol = match.groups()
        start = match.start(match.lastindex)
        if empty:
            yield ('empty', empty, start)
        elif number:
            yield ('int', int(number), start)
        elif name:
            yield ('name', name, start)
        else:
            yield ('sym', symbol, start)
        position = match.end()
    yield ('end', None, len(text))


class TreeParser:
    """Recursive descent parser over the token stream."""

    def __init__(self, text, scaling):
        self.scaling = scaling
        self.tokens = list(_tokenize(text))
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind, value=None):
        token = self.advance()
        if token[0] != kind or (value is not None and token[1] != value):
            expected = value if value is not None else kind
            raise ParseError(f"Expected {expected!r}, found {token[1]!r}", token[2])
        return token

    def at(self, kind, value=None):
        token = self.current
        return token[0] == kind and (value is None or token[1] == value)

    def parse_forest(self):
        if self.at('empty'):
            self.advance()
            self.expect('end')
            return Forest()
        trees = [self.parse_product()]
        while self.at('sym', '.'):
            self.advance()
            trees.append(self.parse_product())
        self.expect('end')
        return Forest(tuple(trees))

    def parse_tree(self):
        tree = self.parse_product()
        self.expect('end')
        return tree

    def parse_product(self):
        factors = [self.parse_factor()]
        while self.at('sym', '*'):
            self.advance()
            factors.append(self.parse_factor())
        return product(factors, self.scaling.d_plus_1)

    def parse_factor(self):
        kind, value, position = self.current
        if kind == 'int' and value == 1:
            self.advance()
            return DecoratedTree(self.scaling.zero())
        if kind == 'name' and value == 'X':
            self.advance()
            if self.at('sym', '^'):
                self.advance()
                return DecoratedTree(self.parse_index())
            return DecoratedTree(self.scaling.unit(0))
        if kind == 'name' and value in ('I', 'J'):
            self.advance()
            self.expect('sym', '[')
            label = self.expect('name')[1]
            self.expect('sym', ',')
            derivative = self.parse_index()
            self.expect('sym', ']')
            self.expect('sym', '(')
            child = self.parse_product()
            self.expect('sym', ')')
            edge = Edge(label, derivative, marked=(value == 'J'))
            return DecoratedTree(self.scaling.zero(), ((edge, child),))
        if kind == 'sym' and value == '(':
            self.advance()
            tree = self.parse_product()
            self.expect('sym', ')')
            return tree
        raise ParseError(f"Unexpected token {value!r}", position)

    def parse_index(self):
        if self.at('int'):
            entries = (self.advance()[1],)
        else:
            self.expect('sym', '[')
            entries = [self.expect('int')[1]]
            while self.at('sym', ','):
                self.advance()
                entries.append(self.expect('int')[1])
            self.expect('sym', ']')
            entries = tuple(entries)
        if len(entries) != self.scaling.d_plus_1:
            raise ParseError(
                f"Multi-index {list(entries)} must have {self.scaling.d_plus_1} entries",
                self.tokens[self.index - 1][2],
            )
        return MultiIndex(entries)


def parse_tree(text, scaling):
    """Parse a tree expression and validate it against `scaling`."""
    return validate(TreeParser(text, scaling).parse_tree(), scaling)


def parse_forest(text, scaling):
    forest = TreeParser(text, scaling).parse_forest()
    for tree in forest:
        validate(tree, scaling)
    return forest


def _format_index(k):
    if len(k) == 1:
        return str(k[0])
    return '[' + ','.join(str(value) for value in k) + ']'


def format_tree(tree):
    factors = []
    if not tree.root.is_zero:
        if tree.root == MultiIndex.unit(tree.d_plus_1, 0):
            factors.append('X')
        else:
            factors.append('X^[' + ','.join(str(value) for value in tree.root) + ']')
    for edge, child in tree.branches:
        symbol = 'J' if edge.marked else 'I'
        factors.append(f"{symbol}[{edge.type},{_format_index(edge.derivative)}]({format_tree(child)})")
    return '*'.join(factors) if factors else '1'


def format_forest(forest):
    if forest.is_unit:
        return EMPTY_FOREST
    return ' . '.join(format_tree(tree) for tree in forest)


def format_element(element):
    """Format a tree, a forest or a tensor of them."""
    if isinstance(element, DecoratedTree):
        return format_tree(element)
    if isinstance(element, Forest):
        return format_forest(element)
    if isinstance(element, tuple):
        return ' ⊗ '.join(format_element(leg) for leg in element)
    return str(element)


def format_sum(combination):
    """Canonical text form of a linear combination, terms sorted by canonical key."""
    if not combination:
        return '0'
    parts = []
    for element, coeff in combination.sorted_items():
        parts.append(f"{format_coefficient(coeff)} {format_element(element)}")
    return ' + '.join(parts)


def _latex_index(k):
    if len(k) == 1:
        return str(k[0])
    return '(' + ','.join(str(value) for value in k) + ')'


def latex_tree(tree):
    factors = []
    if not tree.root.is_zero:
        factors.append(f"X^{{{_latex_index(tree.root)}}}")
    for edge, child in tree.branches:
        symbol = r'\mathcal{J}' if edge.marked else 'I'
        factors.append(f"{symbol}_{{({edge.type},{_latex_index(edge.derivative)})}}({latex_tree(child)})")
    return ' '.join(factors) if factors else r'\mathbf{1}'


def latex_element(element):
    if isinstance(element, DecoratedTree):
        return latex_tree(element)
    if isinstance(element, Forest):
        if element.is_unit:
            return r'\mathbf{1}_1'
        return r' \cdot '.join(latex_tree(tree) for tree in element)
    if isinstance(element, tuple):
        return r' \otimes '.join(latex_element(leg) for leg in element)
    return str(element)


def latex_sum(combination):
    if not combination:
        return '0'
    parts = []
    for element, coeff in combination.sorted_items():
        parts.append(f"{format_coefficient(coeff)}\\, {latex_element(element)}")
    return ' + '.join(parts)


def sum_to_json(combination):
    """JSON form: a list of {coeff, tree} or {coeff, left, right} records."""
    records = []
    for element, coeff in combination.sorted_items():
        record = {'coeff': format_coefficient(coeff)}
        if isinstance(element, tuple) and len(element) == 2:
            record['left'] = format_element(element[0])
            record['right'] = format_element(element[1])
        elif isinstance(element, tuple):
            record['legs'] = [format_element(leg) for leg in element]
        else:
            record['tree'] = format_element(element)
        records.append(record)
    return records
