#!/usr/bin/env python3
"""Regenerate the Hilbert proof scripts shipped in proofs/.

Formulas are built as tuples, printed fully parenthesized, and every line
is computed (never typed in), so each script is correct by construction
and stays in sync with the checker's axiom table.
"""
import json
import os

BOT = ('bot',)


def v(n): return ('var', n)
def mv(n): return ('meta', n)
def imp(a, b): return ('imp', a, b)
def con(a, b): return ('and', a, b)
def dis(a, b): return ('or', a, b)
def box(a): return ('box', a)
def dia(a): return ('dia', a)
def neg(a): return imp(a, BOT)


TOP = imp(BOT, BOT)


def show(f):
    k = f[0]
    if k == 'bot': return '0'
    if k == 'var': return f[1]
    if k == 'meta': return '?' + f[1]
    if k == 'box': return '[]' + show(f[1])
    if k == 'dia': return '<>' + show(f[1])
    op = {'imp': '->', 'and': '&', 'or': '|'}[k]
    return '(' + show(f[1]) + ' ' + op + ' ' + show(f[2]) + ')'


P_, Q_, C_ = mv('phi'), mv('psi'), mv('chi')

SCHEMES = {
    'A1': imp(P_, imp(Q_, P_)),
    'A2': imp(con(P_, Q_), P_),
    'A3': imp(con(P_, Q_), Q_),
    'A4': imp(P_, imp(Q_, con(P_, Q_))),
    'A5': con(imp(BOT, P_), imp(P_, TOP)),
    'A6': imp(P_, dis(P_, Q_)),
    'A7': imp(Q_, dis(P_, Q_)),
    'A8': imp(imp(P_, Q_), imp(imp(C_, P_), imp(C_, Q_))),
    'A9': imp(imp(P_, imp(Q_, C_)), imp(Q_, imp(P_, C_))),
    'A10': imp(con(imp(P_, C_), imp(Q_, C_)), imp(dis(P_, Q_), C_)),
    'A11': imp(imp(P_, imp(Q_, C_)), imp(con(P_, Q_), C_)),
    'A12': imp(con(imp(C_, P_), imp(C_, Q_)), imp(C_, con(P_, Q_))),
    'A13': imp(imp(P_, imp(P_, Q_)), imp(P_, Q_)),
    'K_box': imp(box(imp(P_, Q_)), imp(box(P_), box(Q_))),
    'FS1': imp(dia(imp(P_, Q_)), imp(box(P_), dia(Q_))),
    'FS2': imp(imp(dia(P_), box(Q_)), box(imp(P_, Q_))),
    'F_dia': neg(dia(BOT)),
    'P': imp(box(imp(P_, Q_)), imp(dia(P_), dia(Q_))),
    'Cr': imp(box(dis(P_, Q_)), dis(box(P_), dia(Q_))),
}


def inst(f, s):
    k = f[0]
    if k == 'meta': return s[f[1]]
    if k in ('bot', 'var'): return f
    if k in ('box', 'dia'): return (k, inst(f[1], s))
    return (k, inst(f[1], s), inst(f[2], s))


class Proof:
    def __init__(self, system='GKc', mode='local', presentation=None):
        self.system, self.mode, self.presentation = system, mode, presentation
        self.lines, self.fs = [], []

    def _add(self, f, entry):
        self.lines.append({'formula': show(f), **entry})
        self.fs.append(f)
        return len(self.fs) - 1

    def ax(self, name, **subst):
        f = inst(SCHEMES[name], subst)
        return self._add(f, {'rule': 'axiom', 'name': name,
                             'subst': {k: show(t) for k, t in subst.items()}})

    def mp(self, ant, impl):
        fi = self.fs[impl]
        assert fi[0] == 'imp' and fi[1] == self.fs[ant], (show(fi), show(self.fs[ant]))
        return self._add(fi[2], {'rule': 'mp', 'refs': [ant, impl]})

    def nec_box(self, r):
        return self._add(box(self.fs[r]), {'rule': 'nec_box', 'refs': [r]})

    def nec_dia(self, r):
        f = self.fs[r]
        assert f[0] == 'imp'
        return self._add(imp(dia(f[1]), dia(f[2])), {'rule': 'nec_dia', 'refs': [r]})

    # --- derived one-liners ------------------------------------------------

    def identity(self, a):
        """|- a -> a"""
        contract = self.ax('A13', phi=a, psi=a)
        weaken = self.ax('A1', phi=a, psi=a)
        return self.mp(weaken, contract)

    def trans(self, i_ab, i_bc):
        """from |- a -> b and |- b -> c, |- a -> c"""
        a, b = self.fs[i_ab][1], self.fs[i_ab][2]
        b2, c = self.fs[i_bc][1], self.fs[i_bc][2]
        assert b == b2
        pref = self.ax('A8', phi=b, psi=c, chi=a)  # (b->c)->((a->b)->(a->c))
        return self.mp(i_ab, self.mp(i_bc, pref))

    def conj_intro(self, ia, ib):
        """from |- a and |- b, |- a & b"""
        pair = self.ax('A4', phi=self.fs[ia], psi=self.fs[ib])
        return self.mp(ib, self.mp(ia, pair))

    def or_mono_right(self, a, i_cc):
        """from |- c -> c', |- (a | c) -> (a | c')"""
        c, cp = self.fs[i_cc][1], self.fs[i_cc][2]
        inl = self.ax('A6', phi=a, psi=cp)            # a -> (a | c')
        inr = self.ax('A7', phi=a, psi=cp)            # c' -> (a | c')
        lift = self.trans(i_cc, inr)                  # c -> (a | c')
        both = self.conj_intro(inl, lift)
        elim = self.ax('A10', phi=a, psi=c, chi=dis(a, cp))
        return self.mp(both, elim)

    def or_mono_left(self, i_aa, c):
        """from |- a -> a', |- (a | c) -> (a' | c)"""
        a, ap = self.fs[i_aa][1], self.fs[i_aa][2]
        inl = self.ax('A6', phi=ap, psi=c)            # a' -> (a' | c)
        lift = self.trans(i_aa, inl)                  # a -> (a' | c)
        inr = self.ax('A7', phi=ap, psi=c)            # c -> (a' | c)
        both = self.conj_intro(lift, inr)
        elim = self.ax('A10', phi=a, psi=c, chi=dis(ap, c))
        return self.mp(both, elim)

    def or_commute(self, x, y):
        """|- (x | y) -> (y | x)"""
        inl = self.ax('A7', phi=y, psi=x)             # x -> (y | x)
        inr = self.ax('A6', phi=y, psi=x)             # y -> (y | x)
        both = self.conj_intro(inl, inr)
        elim = self.ax('A10', phi=x, psi=y, chi=dis(y, x))
        return self.mp(both, elim)

    def dump(self, path):
        obj = {'system': self.system, 'mode': self.mode}
        if self.presentation:
            obj['presentation'] = self.presentation
        obj['lines'] = self.lines
        with open(path, 'w') as out:
            json.dump(obj, out, indent=2)
            out.write('\n')


def gen_box_bot():
    """|- 0 -> []0"""
    pr = Proof('GKc')
    bounds = pr.ax('A5', phi=box(BOT))                 # (0 -> []0) & ([]0 -> 1)
    left = pr.ax('A2', phi=imp(BOT, box(BOT)), psi=imp(box(BOT), TOP))
    pr.mp(bounds, left)
    return pr


def gen_z_dia():
    """|- <>~~p -> ~~<>p"""
    p = v('p')
    np, ndp = neg(p), neg(dia(p))
    pr = Proof('GKc', presentation='FS1')
    # <>~~p -> ([]~p -> <>0)
    s1 = pr.ax('FS1', phi=np, psi=BOT)
    # strip the <>0 via F_dia:  <>~~p -> ~[]~p
    fd = pr.ax('F_dia')
    strip = pr.ax('A8', phi=dia(BOT), psi=BOT, chi=box(np))
    s3 = pr.trans(s1, pr.mp(fd, strip))
    # ~<>p -> []~p   (through 0 -> []0 and FS2)
    bounds = pr.ax('A5', phi=box(BOT))
    left = pr.ax('A2', phi=imp(BOT, box(BOT)), psi=imp(box(BOT), TOP))
    bb = pr.mp(bounds, left)                           # 0 -> []0
    lift = pr.ax('A8', phi=BOT, psi=box(BOT), chi=dia(p))
    s4pre = pr.mp(bb, lift)                            # ~<>p -> (<>p -> []0)
    fs2 = pr.ax('FS2', phi=p, psi=BOT)
    s4 = pr.trans(s4pre, fs2)                          # ~<>p -> []~p
    # contrapose:  ~[]~p -> ~~<>p
    pref = pr.ax('A8', phi=box(np), psi=BOT, chi=ndp)
    swap = pr.ax('A9', phi=imp(box(np), BOT), psi=imp(ndp, box(np)), chi=imp(ndp, BOT))
    s5 = pr.mp(s4, pr.mp(pref, swap))
    pr.trans(s3, s5)
    return pr


def gen_t3():
    """|- ([]p -> <>p) | []0"""
    p = v('p')
    pr = Proof('GKc', presentation='FS1')
    idp = pr.identity(p)
    wk = pr.ax('A1', phi=imp(p, p), psi=TOP)
    tp = pr.mp(idp, wk)                                # 1 -> (p -> p)
    nd = pr.nec_dia(tp)                                # <>1 -> <>(p -> p)
    fs1 = pr.ax('FS1', phi=p, psi=p)
    bridge = pr.trans(nd, fs1)                         # <>1 -> ([]p -> <>p)
    top = pr.identity(BOT)                             # 1
    inr = pr.ax('A7', phi=BOT, psi=TOP)
    dsj = pr.mp(top, inr)                              # 0 | 1
    nb = pr.nec_box(dsj)
    cr = pr.ax('Cr', phi=BOT, psi=TOP)
    split = pr.mp(nb, cr)                              # []0 | <>1
    mono = pr.or_mono_right(box(BOT), bridge)
    almost = pr.mp(split, mono)                        # []0 | ([]p -> <>p)
    flip = pr.or_commute(box(BOT), imp(box(p), dia(p)))
    pr.mp(almost, flip)
    return pr


def gen_t1():
    """|- [](p & q) <-> ([]p & []q)"""
    p, q = v('p'), v('q')
    pq = con(p, q)
    pr = Proof('GKc')
    d1a = pr.mp(pr.nec_box(pr.ax('A2', phi=p, psi=q)), pr.ax('K_box', phi=pq, psi=p))
    d1b = pr.mp(pr.nec_box(pr.ax('A3', phi=p, psi=q)), pr.ax('K_box', phi=pq, psi=q))
    both = pr.conj_intro(d1a, d1b)
    glue = pr.ax('A12', chi=box(pq), phi=box(p), psi=box(q))
    dir1 = pr.mp(both, glue)                           # [](p&q) -> ([]p & []q)
    curry = pr.mp(pr.nec_box(pr.ax('A4', phi=p, psi=q)), pr.ax('K_box', phi=p, psi=imp(q, pq)))
    k2 = pr.ax('K_box', phi=q, psi=pq)
    chain = pr.trans(curry, k2)                        # []p -> ([]q -> [](p&q))
    uncurry = pr.ax('A11', phi=box(p), psi=box(q), chi=box(pq))
    dir2 = pr.mp(chain, uncurry)                       # ([]p & []q) -> [](p&q)
    pr.conj_intro(dir1, dir2)
    return pr


def gen_r_dia():
    """|- <>p | (<>q -> <>q)"""
    p, q = v('p'), v('q')
    qq = imp(q, q)
    pr = Proof('GKc', presentation='P')
    idq = pr.identity(q)
    inl = pr.ax('A6', phi=qq, psi=p)
    dsj = pr.mp(idq, inl)                              # (q -> q) | p
    nb = pr.nec_box(dsj)
    cr = pr.ax('Cr', phi=qq, psi=p)
    split = pr.mp(nb, cr)                              # [](q -> q) | <>p
    pax = pr.ax('P', phi=q, psi=q)                     # [](q->q) -> (<>q -> <>q)
    mono = pr.or_mono_left(pax, dia(p))
    almost = pr.mp(split, mono)                        # (<>q -> <>q) | <>p
    flip = pr.or_commute(imp(dia(q), dia(q)), dia(p))
    pr.mp(almost, flip)
    return pr


def main():
    out_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'proofs')
    os.makedirs(out_dir, exist_ok=True)
    for name, gen in [('box_bot', gen_box_bot), ('z_dia', gen_z_dia), ('t3', gen_t3),
                      ('t1', gen_t1), ('r_dia', gen_r_dia)]:
        pr = gen()
        path = os.path.join(out_dir, name + '.proof')
        pr.dump(path)
        print(f"{name}: {len(pr.lines)} lines, concludes {pr.lines[-1]['formula']}")


if __name__ == '__main__':
    main()
