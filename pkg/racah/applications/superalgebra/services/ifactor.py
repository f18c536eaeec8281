from racah.applications.arithmetic.factorial import factorial


class IFactorService:
    @staticmethod
    def trick_sum(symbol):
        """Twice the sum of (-1)^(2(j-m)) j over the columns"""
        return sum(-tj if m % 2 else tj for tj, m in zip(symbol.tj, symbol.tjminus))

    @staticmethod
    def i_factor(symbol):
        if sum(symbol.tj) % 2 == 0:
            return 1
        return (abs(IFactorService.trick_sum(symbol)) + 1) // 2

    @staticmethod
    def i_factor_factorial(symbol):
        # the bracket in the denominator takes |S| so that S < 0 stays defined
        ts = abs(IFactorService.trick_sum(symbol))
        return factorial((ts + 1) // 2) // factorial(ts // 2)
